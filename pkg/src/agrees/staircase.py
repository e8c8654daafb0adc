"""Fast exact path for bivariate monomial ideals.

A staircase is the divisibility antichain of minimal monomial generators,
sorted with x-exponents strictly decreasing.  Integral closure is computed
on the Newton polygon with integer arithmetic only: a lattice point belongs
to the closure exactly when it sits on or above every lower-boundary edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, NotZeroDimensional
from .groebner import Ideal, ideal_order, min_gens
from .poly import Polynomial

Pair = tuple[int, int]


@dataclass(frozen=True)
class Staircase:
    """Minimal generators (a, b) of a monomial ideal, a strictly decreasing."""

    gens: tuple[Pair, ...]

    @property
    def is_m_primary(self) -> bool:
        return self.gens[0][1] == 0 and self.gens[-1][0] == 0

    def contains(self, point: Pair) -> bool:
        a, b = point
        return any(g[0] <= a and g[1] <= b for g in self.gens)

    def order(self) -> int:
        return min(a + b for a, b in self.gens)

    def __str__(self):
        return "{" + ", ".join(f"x^{a}*y^{b}" for a, b in self.gens) + "}"


def staircase_normalize(pairs: Iterable[Pair]) -> Staircase:
    """Drop non-minimal generators and sort canonically."""
    pts = sorted(set((int(a), int(b)) for a, b in pairs))
    if not pts:
        raise EmptyInput("staircase needs at least one exponent pair")
    # sweep with a ascending: a point is redundant iff an earlier kept one
    # has b no larger (its a is already no larger)
    kept: list[Pair] = []
    best_b = None
    for p in pts:
        if best_b is None or p[1] < best_b:
            kept.append(p)
            best_b = p[1]
    kept.reverse()
    return Staircase(tuple(kept))


def _require_primary(s: Staircase):
    if not s.is_m_primary:
        raise NotZeroDimensional(f"staircase {s} lacks a pure power of x or y")


def mono_colength(s: Staircase) -> int:
    """Lattice points under the staircase."""
    _require_primary(s)
    a_max = s.gens[0][0]
    total = 0
    for i in range(a_max):
        total += min(b for a, b in s.gens if a <= i)
    return total


def staircase_product(s: Staircase, t: Staircase) -> Staircase:
    return staircase_normalize(
        (a1 + a2, b1 + b2) for a1, b1 in s.gens for a2, b2 in t.gens
    )


def staircase_power(s: Staircase, k: int) -> Staircase:
    if k == 0:
        return Staircase(((0, 0),))
    out = s
    for _ in range(k - 1):
        out = staircase_product(out, s)
    return out


def staircase_intersection(s: Staircase, t: Staircase) -> Staircase:
    return staircase_normalize(
        (max(a1, a2), max(b1, b2)) for a1, b1 in s.gens for a2, b2 in t.gens
    )


def staircase_colon(s: Staircase, t: Staircase) -> Staircase:
    """s : t as the meet over t's generators of the shifted staircases."""
    result = None
    for a, b in t.gens:
        shifted = staircase_normalize(
            (max(ga - a, 0), max(gb - b, 0)) for ga, gb in s.gens
        )
        result = shifted if result is None else staircase_intersection(result, shifted)
    return result


def hull_vertices(points: Sequence[Pair]) -> list[Pair]:
    """Lower-left hull of the generator points, x increasing."""
    pts = sorted(points)
    hull: list[Pair] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            # non-left turns and collinear middles are not hull vertices
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_closure(s: Staircase) -> Staircase:
    """Integral closure: lattice points on or above the Newton polygon boundary."""
    _require_primary(s)
    hull = hull_vertices(s.gens)
    edges = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        # half-plane (y2-y1)(a-x1) + (x1-x2)(b-y1) <= 0 flipped to alpha*a+beta*b >= c
        alpha = y1 - y2
        beta = x2 - x1
        c = alpha * x1 + beta * y1
        edges.append((alpha, beta, c))
    a_max = s.gens[0][0]
    gens = []
    for a in range(a_max + 1):
        b = 0
        for alpha, beta, c in edges:
            need = c - alpha * a
            if need > 0:
                b = max(b, -(-need // beta))  # ceil division
        gens.append((a, b))
    return staircase_normalize(gens)


def closure_gap_length(s: Staircase) -> int:
    """Length of the closure modulo the ideal; zero iff integrally closed."""
    _require_primary(s)
    return mono_colength(s) - mono_colength(newton_closure(s))


def is_integrally_closed(s: Staircase) -> bool:
    return newton_closure(s) == s


def staircase_of_ideal(I: Ideal) -> Staircase | None:
    """Staircase view of an ideal whose generators are all single terms."""
    pairs = []
    for g in I.generators:
        if g.is_zero:
            continue
        if not g.is_monomial:
            return None
        pairs.append(g.monomial_exponent())
    if not pairs or any(len(e) != 2 for e in pairs):
        return None
    return staircase_normalize(pairs)


def ideal_of_staircase(s: Staircase, ring, field) -> Ideal:
    return Ideal([Polynomial.monomial(ring, field, e) for e in s.gens])


def is_contracted(obj) -> bool:
    """mu(I) = o(I) + 1, the generator-count characterization."""
    if isinstance(obj, Staircase):
        _require_primary(obj)
        return len(obj.gens) == obj.order() + 1
    stair = staircase_of_ideal(obj)
    if stair is not None:
        return is_contracted(stair)
    return min_gens(obj) == ideal_order(obj) + 1


def render_staircase(s: Staircase) -> str:
    """ASCII art: rows are y-exponents descending, '#' inside the ideal."""
    a_max = max(a for a, _ in s.gens)
    b_max = max(b for _, b in s.gens)
    rows = []
    for b in range(b_max, -1, -1):
        rows.append("".join("#" if s.contains((a, b)) else "." for a in range(a_max + 1)))
    return "\n".join(rows)
