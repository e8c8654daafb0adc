"""Text grammar for polynomials and ideal specifications.

    poly  := ('+'|'-')? term (('+'|'-') term)*
    term  := coeff? mono?          (at least one of the two)
    mono  := var ('^' nat)? ('*'? var ('^' nat)?)*
    var   := 'x' | 'y' | 't' | 'T' nat
    coeff := integer | integer '/' integer

Whitespace and '*' are optional between factors.  An ideal specification is
a comma-separated list of polynomials, optionally wrapped in ``ideal( ... )``.
"""

from __future__ import annotations

from .errors import EmptyIdeal, ParseError, UnknownVariable
from .poly import Polynomial, Ring

_VAR_LETTERS = "xytT"


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", int(text[i:j]), i))
            i = j
            continue
        if ch == "T":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("bare 'T' without index", i, "T<number>")
            tokens.append(_Token("VAR", text[i:j], i))
            i = j
            continue
        if ch in _VAR_LETTERS:
            tokens.append(_Token("VAR", ch, i))
            i += 1
            continue
        if text.startswith("ideal", i):
            tokens.append(_Token("IDEAL", "ideal", i))
            i += 5
            continue
        if ch in "^*+-/(),":
            kind = {"^": "CARET", "*": "STAR", "+": "PLUS", "-": "MINUS",
                    "/": "SLASH", "(": "LPAREN", ")": "RPAREN", ",": "COMMA"}[ch]
            tokens.append(_Token(kind, ch, i))
            i += 1
            continue
        if ch.isalpha():
            raise UnknownVariable(f"unknown variable {ch!r}", i, "one of x, y, t, T<n>")
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("EOF", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], ring: Ring, field):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {tok.value!r}", tok.pos, kind)
        return self.advance()

    def parse_poly(self, stop_kinds=("EOF",)) -> Polynomial:
        result = Polynomial.zero(self.ring, self.field)
        sign = 1
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = -1 if self.advance().kind == "MINUS" else 1
        result = result + self.parse_term(sign)
        while self.peek().kind not in stop_kinds:
            tok = self.peek()
            if tok.kind == "PLUS":
                self.advance()
                result = result + self.parse_term(1)
            elif tok.kind == "MINUS":
                self.advance()
                result = result + self.parse_term(-1)
            else:
                raise ParseError(f"unexpected {tok.value!r}", tok.pos, "'+' or '-'")
        return result

    def parse_term(self, sign: int) -> Polynomial:
        f = self.field
        coeff = None
        if self.peek().kind == "INT":
            num = self.advance().value
            if self.peek().kind == "SLASH":
                self.advance()
                den = self.expect("INT").value
                try:
                    coeff = f.fraction(num, den)
                except ZeroDivisionError:
                    raise ParseError("denominator vanishes in the coefficient field",
                                     self.tokens[self.pos - 1].pos) from None
            else:
                coeff = f.from_int(num)
            if self.peek().kind == "STAR":
                self.advance()
        exponents = [0] * self.ring.arity
        saw_var = False
        while True:
            tok = self.peek()
            if tok.kind == "STAR" and self.tokens[self.pos + 1].kind == "VAR":
                self.advance()
                tok = self.peek()
            if tok.kind != "VAR":
                break
            self.advance()
            if tok.value not in self.ring.vars:
                raise UnknownVariable(
                    f"variable {tok.value!r} not in {self.ring}", tok.pos)
            exp = 1
            if self.peek().kind == "CARET":
                self.advance()
                exp = self.expect("INT").value
            exponents[self.ring.index(tok.value)] += exp
            saw_var = True
        if coeff is None and not saw_var:
            tok = self.peek()
            raise ParseError(f"expected a term, found {tok.value!r}", tok.pos,
                             "coefficient or variable")
        if coeff is None:
            coeff = f.one
        if sign < 0:
            coeff = f.neg(coeff)
        return Polynomial.monomial(self.ring, f, tuple(exponents), coeff)


def parse_polynomial(text: str, ring: Ring, field) -> Polynomial:
    """Parse a single polynomial in the grammar above."""
    parser = _Parser(_tokenize(text), ring, field)
    poly = parser.parse_poly()
    parser.expect("EOF")
    return poly


def parse_ideal_spec(text: str, ring: Ring, field) -> list[Polynomial]:
    """Parse a comma-separated generator list, optionally ``ideal( ... )``."""
    tokens = _tokenize(text)
    parser = _Parser(tokens, ring, field)
    wrapped = False
    if parser.peek().kind == "IDEAL":
        parser.advance()
        parser.expect("LPAREN")
        wrapped = True
    stop = ("COMMA", "RPAREN", "EOF") if wrapped else ("COMMA", "EOF")
    end = "RPAREN" if wrapped else "EOF"
    if parser.peek().kind == end:
        raise EmptyIdeal("ideal specification has no generators")
    gens = [parser.parse_poly(stop)]
    while parser.peek().kind == "COMMA":
        parser.advance()
        gens.append(parser.parse_poly(stop))
    parser.expect(end)
    if wrapped:
        parser.expect("EOF")
    return gens
