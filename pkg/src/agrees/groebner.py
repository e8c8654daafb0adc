"""Buchberger-based ideal arithmetic.

The engine keeps polynomials as exponent->coefficient dicts and runs classic
Buchberger with the sugar selection strategy, pruning pairs with the coprime
leading-term criterion and the chain criterion (Gebauer-Moeller style
bookkeeping).  Reduced bases are unique, so every operation here is
deterministic for a fixed input and order.
"""

from __future__ import annotations

from typing import Sequence

from .errors import (
    EliminationBudgetExceeded,
    NotZeroDimensional,
    RingMismatch,
    ZeroDivisorIdeal,
    ZeroIdeal,
)
from .poly import (
    GREVLEX,
    BlockElimination,
    Exponent,
    MonomialOrder,
    Polynomial,
    Ring,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

_Term = dict  # exponent tuple -> coefficient


# -- dict-level engine -------------------------------------------------------

def _lead(p: _Term, keyf) -> Exponent:
    return max(p, key=keyf)


def _nf_dict(p: _Term, basis: list, keyf, field) -> _Term:
    """Full normal form of p against basis entries (lm, lc, terms)."""
    work = dict(p)
    rem: _Term = {}
    zero = field.zero
    while work:
        lm = _lead(work, keyf)
        c = work.pop(lm)
        for blm, blc, bterms in basis:
            if mono_divides(blm, lm):
                scale = field.div(c, blc)
                shift = mono_div(lm, blm)
                for m, bc in bterms.items():
                    if m == blm:
                        continue
                    mm = mono_mul(m, shift)
                    nv = field.sub(work.get(mm, zero), field.mul(scale, bc))
                    if nv == zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = nv
                break
        else:
            rem[lm] = c
    return rem


def _spoly(f, g, lcm: Exponent, field) -> _Term:
    lmf, lcf, tf = f
    lmg, lcg, tg = g
    sf = mono_div(lcm, lmf)
    sg = mono_div(lcm, lmg)
    out: _Term = {}
    zero = field.zero
    inv_f = field.inv(lcf)
    for m, c in tf.items():
        out[mono_mul(m, sf)] = field.mul(c, inv_f)
    inv_g = field.inv(lcg)
    for m, c in tg.items():
        mm = mono_mul(m, sg)
        nv = field.sub(out.get(mm, zero), field.mul(c, inv_g))
        if nv == zero:
            out.pop(mm, None)
        else:
            out[mm] = nv
    return out


def _update_pairs(G, sugars, P, f_entry, f_sugar, keyf):
    """Add f to the basis, pruning pairs by the chain and coprime criteria."""
    lmf = f_entry[0]
    m = len(G)
    kept = {}
    for (i, j), (L, s) in P.items():
        if (
            mono_divides(lmf, L)
            and mono_lcm(G[i][0], lmf) != L
            and mono_lcm(G[j][0], lmf) != L
        ):
            continue  # chain criterion
        kept[(i, j)] = (L, s)
    groups: dict[Exponent, list[int]] = {}
    for i in range(m):
        groups.setdefault(mono_lcm(G[i][0], lmf), []).append(i)
    minimal: list[Exponent] = []
    for L in sorted(groups, key=keyf):
        if all(not mono_divides(Lp, L) for Lp in minimal):
            minimal.append(L)
    for L in minimal:
        if any(mono_lcm(G[i][0], lmf) == mono_mul(G[i][0], lmf) for i in groups[L]):
            continue  # coprime leading terms reduce to zero
        i = min(groups[L])
        sug = max(
            sugars[i] + mono_deg(L) - mono_deg(G[i][0]),
            f_sugar + mono_deg(L) - mono_deg(lmf),
        )
        kept[(i, m)] = (L, sug)
    G.append(f_entry)
    sugars.append(f_sugar)
    return kept


def _monic_entry(p: _Term, keyf, field):
    lm = _lead(p, keyf)
    lc = p[lm]
    if lc != field.one:
        inv = field.inv(lc)
        p = {m: field.mul(c, inv) for m, c in p.items()}
    return (lm, field.one, p)


def _buchberger(inputs: list[_Term], keyf, field, max_basis=None, max_deg=None) -> list[_Term]:
    G: list = []
    sugars: list[int] = []
    P: dict = {}
    for p in inputs:
        if not p:
            continue
        sug = max(mono_deg(m) for m in p)
        P = _update_pairs(G, sugars, P, _monic_entry(p, keyf, field), sug, keyf)
    while P:
        pair = min(P, key=lambda ij: (P[ij][1], keyf(P[ij][0]), ij))
        L, sug = P.pop(pair)
        i, j = pair
        s = _spoly(G[i], G[j], L, field)
        r = _nf_dict(s, G, keyf, field)
        if r:
            P = _update_pairs(G, sugars, P, _monic_entry(r, keyf, field), sug, keyf)
            if max_basis is not None and len(G) > max_basis:
                raise EliminationBudgetExceeded(f"basis grew past {max_basis} elements")
            if max_deg is not None and max(mono_deg(m) for m in r) > max_deg:
                raise EliminationBudgetExceeded(f"basis degree grew past {max_deg}")
    # minimalize: leading monomials must form a divisibility antichain
    order_asc = sorted(range(len(G)), key=lambda i: keyf(G[i][0]))
    minimal: list = []
    for i in order_asc:
        if all(not mono_divides(e[0], G[i][0]) for e in minimal):
            minimal.append(G[i])
    # interreduce to the unique reduced basis
    reduced: list[_Term] = []
    for k, entry in enumerate(minimal):
        others = [e for idx, e in enumerate(minimal) if idx != k]
        r = _nf_dict(entry[2], others, keyf, field)
        reduced.append(_monic_entry(r, keyf, field)[2])
    reduced.sort(key=lambda p: keyf(_lead(p, keyf)), reverse=True)
    return reduced


# -- public layer ------------------------------------------------------------

class GroebnerBasis:
    """Reduced Groebner basis: monic elements, leading monomials an antichain."""

    __slots__ = ("ring", "field", "order", "elements", "_lead_data")

    def __init__(self, ring: Ring, field, order: MonomialOrder, elements: tuple[Polynomial, ...]):
        self.ring = ring
        self.field = field
        self.order = order
        self.elements = elements
        keyf = order.key(ring)
        self._lead_data = [
            (max(p.terms, key=keyf), field.one, p.terms) for p in elements
        ]

    def __iter__(self):
        return iter(self.elements)

    def leading_exponents(self) -> list[Exponent]:
        return [lm for lm, _, _ in self._lead_data]


class Ideal:
    """Generator list plus a write-once cache of reduced bases per order.

    Instances are immutable apart from the cache; concurrent readers may
    race to insert, but both compute the same reduced basis so either
    insertion is correct.
    """

    __slots__ = ("ring", "field", "generators", "_gb_cache")

    def __init__(self, generators: Sequence[Polynomial]):
        gens = tuple(generators)
        if not gens:
            raise ZeroIdeal("an ideal needs at least one generator")
        first = gens[0]
        for g in gens[1:]:
            if g.ring != first.ring or g.field != first.field:
                raise RingMismatch("generators live in different rings or fields")
        self.ring = first.ring
        self.field = first.field
        self.generators = gens
        self._gb_cache: dict[MonomialOrder, GroebnerBasis] = {}

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        cached = self._gb_cache.get(order)
        if cached is not None:
            return cached
        keyf = order.key(self.ring)
        dicts = _buchberger([dict(g.terms) for g in self.generators], keyf, self.field)
        gb = GroebnerBasis(
            self.ring,
            self.field,
            order,
            tuple(Polynomial(self.ring, self.field, d) for d in dicts),
        )
        self._gb_cache[order] = gb
        return gb

    def is_monomial(self) -> bool:
        return all(g.is_monomial or g.is_zero for g in self.generators)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    return I.groebner_basis(order)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if p.ring != gb.ring or p.field != gb.field:
        raise RingMismatch("polynomial and basis live in different rings or fields")
    keyf = gb.order.key(gb.ring)
    r = _nf_dict(dict(p.terms), gb._lead_data, keyf, gb.field)
    return Polynomial(gb.ring, gb.field, r)


def ideal_contains(I: Ideal, p: Polynomial) -> bool:
    return normal_form(p, I.groebner_basis()).is_zero


def _contains_all(I: Ideal, polys: Sequence[Polynomial]) -> bool:
    gb = I.groebner_basis()
    keyf = gb.order.key(gb.ring)
    return all(
        not _nf_dict(dict(p.terms), gb._lead_data, keyf, gb.field) for p in polys
    )


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring or I.field != J.field:
        raise RingMismatch("ideals live in different rings or fields")
    return _contains_all(J, I.generators) and _contains_all(I, J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring or I.field != J.field:
        raise RingMismatch("ideals live in different rings or fields")
    gens = []
    seen = set()
    for f in I.generators:
        for g in J.generators:
            p = f * g
            if p.is_zero or p in seen:
                continue
            seen.add(p)
            gens.append(p)
    if not gens:
        gens = [Polynomial.zero(I.ring, I.field)]
    return Ideal(gens)


def ideal_pow(I: Ideal, k: int) -> Ideal:
    if k == 0:
        return Ideal([Polynomial.one(I.ring, I.field)])
    result = I
    for _ in range(k - 1):
        result = ideal_product(result, I)
    return result


def _extended(ring: Ring) -> tuple[Ring, tuple[int, ...]]:
    aux = Ring(("u",) + ring.vars)
    return aux, tuple(range(1, aux.arity))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I and J meet via one auxiliary variable: (u I + (1-u) J) with u eliminated."""
    if I.ring != J.ring or I.field != J.field:
        raise RingMismatch("ideals live in different rings or fields")
    ring, field = I.ring, I.field
    aux, keep = _extended(ring)
    u = Polynomial.variable(aux, field, "u")
    one_minus_u = Polynomial.one(aux, field) - u

    def lift(p: Polynomial) -> Polynomial:
        return Polynomial(aux, field, {(0,) + e: c for e, c in p.terms.items()})

    gens = [u * lift(f) for f in I.generators] + [one_minus_u * lift(g) for g in J.generators]
    order = BlockElimination(front=("u",))
    keyf = order.key(aux)
    basis = _buchberger([dict(g.terms) for g in gens if not g.is_zero], keyf, field)
    trimmed = [
        Polynomial(aux, field, d).project(ring, keep)
        for d in basis
        if all(e[0] == 0 for e in d)
    ]
    if not trimmed:
        trimmed = [Polynomial.zero(ring, field)]
    return Ideal(trimmed)


def _exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient p/f when f divides p (polynomial rings over fields are UFDs)."""
    field = p.field
    keyf = GREVLEX.key(p.ring)
    lmf, lcf = f.leading()
    work = dict(p.terms)
    out: _Term = {}
    zero = field.zero
    while work:
        lm = _lead(work, keyf)
        c = work.pop(lm)
        assert mono_divides(lmf, lm), "exact division called on a non-multiple"
        shift = mono_div(lm, lmf)
        scale = field.div(c, lcf)
        out[shift] = scale
        for m, fc in f.terms.items():
            if m == lmf:
                continue
            mm = mono_mul(m, shift)
            nv = field.sub(work.get(mm, zero), field.mul(scale, fc))
            if nv == zero:
                work.pop(mm, None)
            else:
                work[mm] = nv
    return Polynomial(p.ring, field, out)


def _colon_single(I: Ideal, f: Polynomial) -> Ideal:
    meet = ideal_intersection(I, Ideal([f]))
    gens = [_exact_divide(g, f) for g in meet.generators if not g.is_zero]
    if not gens:
        gens = [Polynomial.zero(I.ring, I.field)]
    return Ideal(gens)


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J computed as the meet over J's generators of I : f."""
    if I.ring != J.ring or I.field != J.field:
        raise RingMismatch("ideals live in different rings or fields")
    divisors = [f for f in J.generators if not f.is_zero]
    if not divisors:
        raise ZeroDivisorIdeal("colon by the zero ideal")
    result = _colon_single(I, divisors[0])
    for f in divisors[1:]:
        result = ideal_intersection(result, _colon_single(I, f))
    return result


def _staircase_count(lead_exps: list[Exponent]) -> int:
    """Lattice points outside the monomial ideal spanned by lead_exps (2 vars)."""
    if any(e == (0, 0) for e in lead_exps):
        return 0
    xs = [e[0] for e in lead_exps if e[1] == 0]
    ys = [e[1] for e in lead_exps if e[0] == 0]
    if not xs or not ys:
        raise NotZeroDimensional(
            "leading terms contain no pure power of each variable")
    total = 0
    for i in range(min(xs)):
        total += min(e[1] for e in lead_exps if e[0] <= i)
    return total


def colength(I: Ideal) -> int:
    """Length of R/I as the count of standard monomials (2-variable rings)."""
    if I.ring.arity != 2:
        raise NotZeroDimensional(f"colength requires a 2-variable ring, got {I.ring}")
    gb = I.groebner_basis()
    if not gb.elements:
        raise NotZeroDimensional("zero ideal has infinite colength")
    return _staircase_count(gb.leading_exponents())


def is_origin_primary(I: Ideal) -> bool:
    """True when V(I) is exactly the origin, i.e. rad(I) = (x, y) globally.

    Finite colength alone admits zeros away from the origin; those are ruled
    out by checking that pure variable powers lie in the ideal itself (the
    nilpotency index on R/I is at most its length).
    """
    if I.ring.arity != 2:
        return False
    gb = I.groebner_basis()
    if not gb.elements:
        return False
    leads = gb.leading_exponents()
    if any(e == (0, 0) for e in leads):
        return False  # unit ideal
    if not any(e[1] == 0 for e in leads) or not any(e[0] == 0 for e in leads):
        return False
    ell = _staircase_count(leads)
    x = Polynomial.variable(I.ring, I.field, "x")
    y = Polynomial.variable(I.ring, I.field, "y")
    return ideal_contains(I, x ** ell) and ideal_contains(I, y ** ell)


def maximal_ideal(ring: Ring, field) -> Ideal:
    return Ideal([Polynomial.variable(ring, field, v) for v in ring.vars])


def min_gens(I: Ideal) -> int:
    """mu(I) = len(I/mI) via colength(mI) - colength(I), valid at the origin."""
    m = maximal_ideal(I.ring, I.field)
    return colength(ideal_product(m, I)) - colength(I)


def ideal_order(I: Ideal) -> int:
    """Largest n with I inside m^n: minimum term degree over the generators."""
    degs = [g.min_degree() for g in I.generators if not g.is_zero]
    if not degs:
        raise ZeroIdeal("the zero ideal has no order")
    return min(degs)


def minimal_generators(I: Ideal) -> list[Polynomial]:
    """A minimal generating set, extracted greedily against (vars) * I."""
    if I.is_monomial():
        from .staircase import staircase_of_ideal

        stair = staircase_of_ideal(I)
        return [
            Polynomial.monomial(I.ring, I.field, e) for e in stair.gens
        ]
    gb = list(I.groebner_basis().elements)
    field = I.field
    ring = I.ring
    keyf = GREVLEX.key(ring)
    scaled = [
        Polynomial.variable(ring, field, v) * g for v in ring.vars for g in gb
    ]
    candidates = sorted(gb, key=lambda g: (g.min_degree(), keyf(g.leading()[0])))
    kept: list[Polynomial] = []
    for g in candidates:
        probe = Ideal(kept + scaled)
        if not ideal_contains(probe, g):
            kept.append(g)
    return kept
