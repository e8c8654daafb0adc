"""Named parameter families of monomial ideals used by the survey tooling."""

from __future__ import annotations

from typing import Mapping

from .errors import BadParameters
from .fields import QQ
from .groebner import Ideal
from .poly import BASE_RING, Polynomial, Ring

# family name -> ordered parameter names
FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "contracted-o3": ("n", "alpha", "beta"),
    "power-order": ("m", "n"),
    "three-gen": ("n", "alpha"),
    "remark43": ("m",),
}


def _mono(ring, field, a: int, b: int) -> Polynomial:
    return Polynomial.monomial(ring, field, (a, b))


def family_exponents(name: str, params: Mapping[str, int]) -> list[tuple[int, int]]:
    """Generator exponents for the named family; raises on constraint violations."""
    if name == "contracted-o3":
        n, alpha, beta = params["n"], params["alpha"], params["beta"]
        if not 0 < alpha < beta < n:
            raise BadParameters(
                f"contracted-o3 needs 0 < alpha < beta < n, got (n,alpha,beta)=({n},{alpha},{beta})")
        return [(3, 0), (2, alpha), (1, beta), (0, n)]
    if name == "power-order":
        m, n = params["m"], params["n"]
        if not 2 <= m <= n:
            raise BadParameters(f"power-order needs 2 <= m <= n, got (m,n)=({m},{n})")
        # (x^m) + y^(n-m+1) * m^(m-1)
        return [(m, 0)] + [(m - 1 - j, n - m + 1 + j) for j in range(m)]
    if name == "three-gen":
        n, alpha = params["n"], params["alpha"]
        if not 0 < alpha < n:
            raise BadParameters(f"three-gen needs 0 < alpha < n, got (n,alpha)=({n},{alpha})")
        if 2 * alpha < n:
            raise BadParameters(f"three-gen needs 2*alpha >= n, got (n,alpha)=({n},{alpha})")
        return [(3, 0), (2, alpha), (0, n)]
    if name == "remark43":
        m = params["m"]
        if m < 4:
            raise BadParameters(f"remark43 needs m >= 4, got m={m}")
        return [(m, 0), (0, 2 * m)] + [(m - i, 2 * i + 1) for i in range(1, m)]
    raise BadParameters(f"unknown family {name!r}; choose from {sorted(FAMILY_PARAMS)}")


def make_family(name: str, params: Mapping[str, int], ring: Ring = BASE_RING,
                field=QQ) -> Ideal:
    """Build the named family member as an ideal over the given field."""
    exps = family_exponents(name, params)
    return Ideal([_mono(ring, field, a, b) for a, b in exps])
