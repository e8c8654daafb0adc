"""Classifier for the almost Gorenstein property of Rees algebras.

The pipeline: find a 2-generated reduction Q of I, require stability
(I^2 = QI), read everything off the colon ideal J = Q : I, then either
certify with a witness triple (f, g, h) satisfying

    IJ = gJ + Ih    and    mJ = fJ + mh,

or refute by showing that no h in J can keep mu(IJ/Ih) + mu(mJ/mh) within
the generator-count budget 2*(mu(J) - 1).  Ideals with neither a certificate
nor a refutation stay UNKNOWN; that verdict is first-class.
"""

from __future__ import annotations

import enum
import hashlib
import random
from dataclasses import dataclass, replace

from .errors import NoReductionFound, NotContained, NotStable, NotZeroDimensional
from .fields import CONFIRM_PRIME, DEFAULT_SURVEY_PRIME, PrimeField
from .groebner import (
    Ideal,
    colength,
    ideal_colon,
    ideal_equal,
    ideal_order,
    ideal_product,
    is_origin_primary,
    maximal_ideal,
    min_gens,
    minimal_generators,
    _contains_all,
)
from .poly import Polynomial
from .staircase import (
    Staircase,
    hull_vertices,
    ideal_of_staircase,
    mono_colength,
    newton_closure,
    staircase_colon,
    staircase_normalize,
    staircase_of_ideal,
    staircase_product,
)

_RAND_RANGE = 1 << 20  # sample space for random coefficients (Schwartz-Zippel)


def derive_seed(*parts) -> int:
    """Stable 64-bit seed derived from the given parts; hash-seed independent."""
    blob = ":".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")


class Verdict(enum.Enum):
    GORENSTEIN = "GORENSTEIN"
    AG_CERTIFIED = "AG_CERTIFIED"
    NOT_AG = "NOT_AG"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ClassifyConfig:
    seed: int = 0
    certificate_budget: int = 64
    reduction_pairs: int = 32
    reduction_cap: int = 4
    refuter_trials: int = 16
    # second prime confirming NOT_AG over a prime field; None picks the default
    confirm_prime: int | None = None


@dataclass(frozen=True)
class ReductionData:
    Q: tuple[Polynomial, Polynomial]
    reduction_number: int
    stable: bool


@dataclass(frozen=True)
class AGWitness:
    f: Polynomial
    g: Polynomial
    h: Polynomial


@dataclass(frozen=True)
class RefutationData:
    mu_IJ: int
    mu_mJ: int
    mu_J: int
    threshold: int
    min_sum: int
    rank_I: int
    rank_m: int
    trials: int
    seeds: tuple[int, ...]
    primes: tuple[int, ...]
    failure_bound: float


@dataclass(frozen=True)
class AGReport:
    verdict: Verdict
    order: int
    min_gens: int
    colength: int
    contracted: bool
    integrally_closed: bool | None
    reduction: ReductionData | None
    colon_gens: tuple[Polynomial, ...] | None
    colon_order: int | None
    colon_min_gens: int | None
    witness: AGWitness | None
    refutation: RefutationData | None
    notes: tuple[str, ...]


# -- representation dispatch -------------------------------------------------
# Monomial inputs route through staircases; everything else uses the Groebner
# kernel.  The two paths agree (checked by the oracle-equivalence suite).

def _stair(I: Ideal) -> Staircase | None:
    return staircase_of_ideal(I)


def _mul(A: Ideal, B: Ideal) -> Ideal:
    sa, sb = _stair(A), _stair(B)
    if sa is not None and sb is not None:
        return ideal_of_staircase(staircase_product(sa, sb), A.ring, A.field)
    return ideal_product(A, B)


def _pow(A: Ideal, k: int) -> Ideal:
    sa = _stair(A)
    if sa is not None:
        out = sa
        for _ in range(k - 1):
            out = staircase_product(out, sa)
        return ideal_of_staircase(out, A.ring, A.field)
    out = A
    for _ in range(k - 1):
        out = ideal_product(out, A)
    return out


def _contained_in(A: Ideal, B: Ideal) -> bool:
    sa, sb = _stair(A), _stair(B)
    if sa is not None and sb is not None:
        return all(sb.contains(e) for e in sa.gens)
    return _contains_all(B, A.generators)


def _equal(A: Ideal, B: Ideal) -> bool:
    sa, sb = _stair(A), _stair(B)
    if sa is not None and sb is not None:
        return sa == sb
    return ideal_equal(A, B)


def _colength(I: Ideal) -> int:
    s = _stair(I)
    return mono_colength(s) if s is not None else colength(I)


def _mu(I: Ideal) -> int:
    s = _stair(I)
    return len(s.gens) if s is not None else min_gens(I)


def _min_gens_list(I: Ideal) -> list[Polynomial]:
    return minimal_generators(I)


def _is_contracted(I: Ideal) -> bool:
    return _mu(I) == ideal_order(I) + 1


# -- reductions ---------------------------------------------------------------

def _reduction_number(I: Ideal, Q: Ideal, cap: int) -> int | None:
    """Minimal r <= cap with I^{r+1} = Q I^r; Q <= I is assumed."""
    if _contained_in(I, Q):
        return 0
    power = I
    for r in range(1, cap + 1):
        lhs = _mul(I, power)
        rhs = _mul(Q, power)
        if _contained_in(lhs, rhs):  # the reverse inclusion holds since Q <= I
            return r
        power = lhs
    return None


def find_reduction(I: Ideal, seed: int = 0, pairs: int = 32, cap: int = 4) -> ReductionData:
    """Find a parameter reduction Q of I together with its reduction number.

    Monomial ideals whose pure powers x^a, y^b dominate the Newton polygon
    get Q = (x^a, y^b).  Otherwise pairs of linear combinations of the
    generators are tried: first the even/odd splits of the Newton-polygon
    vertices (their supports cover the polygon, so they are always local
    reductions), then seeded random sparse combinations.  A pair is only
    accepted when it is m-primary as a global ideal; combinations that pick
    up zeros away from the origin would silently corrupt every later colon,
    so they are rejected rather than trusted.
    """
    ring, fld = I.ring, I.field
    stair = _stair(I)
    candidates: list[tuple[Polynomial, Polynomial]] = []
    if stair is not None and stair.is_m_primary:
        a = stair.gens[0][0]
        b = stair.gens[-1][1]
        if all(i * b + j * a >= a * b for i, j in stair.gens):
            Q = Ideal([
                Polynomial.monomial(ring, fld, (a, 0)),
                Polynomial.monomial(ring, fld, (0, b)),
            ])
            r = _reduction_number(I, Q, cap)
            if r is None:
                raise NoReductionFound(
                    f"pure-power reduction exceeds reduction number {cap}")
            return ReductionData(Q=(Q.generators[0], Q.generators[1]),
                                 reduction_number=r, stable=r <= 1)
        seen_splits = set()
        for pts in (tuple(hull_vertices(stair.gens)), stair.gens):
            if len(pts) < 2 or pts in seen_splits:
                continue
            seen_splits.add(pts)
            even = [Polynomial.monomial(ring, fld, e) for e in pts[0::2]]
            odd = [Polynomial.monomial(ring, fld, e) for e in pts[1::2]]
            q1 = sum(even[1:], even[0])
            q2 = sum(odd[1:], odd[0])
            candidates.append((q1, q2))

    rng = random.Random(derive_seed(seed, "reduction"))
    gens = [g for g in I.generators if not g.is_zero]
    zero = Polynomial.zero(ring, fld)

    def menu() -> int:
        pick = rng.randrange(6)
        return (0, 0, 1, -1, 2, rng.randint(3, 99))[pick]

    while len(candidates) < pairs:
        combos = []
        for _ in range(2):
            q = zero
            for g in gens:
                q = q + g.scale(fld.from_int(menu()))
            combos.append(q)
        candidates.append((combos[0], combos[1]))

    for q1, q2 in candidates[:pairs]:
        if q1.is_zero or q2.is_zero:
            continue
        Q = Ideal([q1, q2])
        if not is_origin_primary(Q):
            continue
        r = _reduction_number(I, Q, cap)
        if r is not None:
            return ReductionData(Q=(q1, q2), reduction_number=r, stable=r <= 1)
    raise NoReductionFound(f"no reduction with r <= {cap} found in {pairs} attempts")


def is_stable(I: Ideal, Q: Ideal) -> bool:
    """I^2 = QI for the given reduction; raises if Q is not inside I."""
    if not _contained_in(Q, I):
        raise NotContained("Q is not contained in I")
    return _contained_in(_mul(I, I), _mul(Q, I))


def canonical_colon(I: Ideal, Q: Ideal, stable: bool | None = None) -> Ideal:
    """J = Q : I; for contracted stable I the orders must satisfy o(I) = o(J)+1."""
    sQ, sI = _stair(Q), _stair(I)
    if sQ is not None and sI is not None:
        J = ideal_of_staircase(staircase_colon(sQ, sI), I.ring, I.field)
    else:
        J = ideal_colon(Q, I)
    if stable is None:
        stable = is_stable(I, Q)
    if stable and _is_contracted(I):
        o_i, o_j = ideal_order(I), ideal_order(J)
        if o_i != o_j + 1:
            raise RuntimeError(
                f"order drop violated: o(I)={o_i}, o(J)={o_j} for contracted stable input")
    return J


# -- certificates --------------------------------------------------------------

def _sum_equals(ref: Ideal, ref_stair: Staircase | None, ref_min: list[Polynomial],
                parts: list[Polynomial]) -> bool:
    """Does the ideal generated by `parts` equal `ref`?  parts <= ref is assumed."""
    nonzero = [p for p in parts if not p.is_zero]
    if not nonzero:
        return False
    if ref_stair is not None and all(p.is_monomial for p in nonzero):
        s = staircase_normalize([p.monomial_exponent() for p in nonzero])
        return s == ref_stair
    return _contains_all(Ideal(nonzero), ref_min)


def _menu_coeff(rng: random.Random, fld):
    pick = rng.randrange(5)
    if pick < 4:
        return fld.from_int((1, -1, 2, -2)[pick])
    return fld.from_int(rng.randint(3, _RAND_RANGE))


def witness_candidates(I: Ideal, Q: Ideal, J: Ideal, budget: int = 64,
                       seed: int = 0) -> tuple[list, list, list]:
    """Candidate pools (h, g, f) scanned by the certificate search."""
    ring, fld = I.ring, I.field
    j_min = _min_gens_list(J)
    seen: set[Polynomial] = set()
    hs: list[Polynomial] = []

    def push(h: Polynomial):
        if h.is_zero:
            return
        key = h.monic()
        if key in seen:
            return
        seen.add(key)
        hs.append(h)

    for w in j_min:
        push(w)
    for i, wi in enumerate(j_min):
        for j, wj in enumerate(j_min):
            if i != j:
                push(wi - wj)
    rng = random.Random(derive_seed(seed, "certificate"))
    for _ in range(budget):
        h = Polynomial.zero(ring, fld)
        for w in j_min:
            h = h + w.scale(_menu_coeff(rng, fld))
        push(h)

    gs: list[Polynomial] = []
    gseen: set[Polynomial] = set()
    for g in list(I.generators) + list(Q.generators):
        if not g.is_zero and g not in gseen:
            gseen.add(g)
            gs.append(g)

    x = Polynomial.variable(ring, fld, "x")
    y = Polynomial.variable(ring, fld, "y")
    fs: list[Polynomial] = []
    fseen: set[Polynomial] = set()
    for f in (x, y, x - y, y - x):
        key = f.monic()
        if key not in fseen:
            fseen.add(key)
            fs.append(f)
    return hs, gs, fs


def verify_witness(I: Ideal, J: Ideal, f: Polynomial, g: Polynomial,
                   h: Polynomial) -> bool:
    """Check both witness equalities with full Groebner comparisons."""
    ring, fld = I.ring, I.field
    m = maximal_ideal(ring, fld)
    IJ = _mul(I, J)
    mJ = _mul(m, J)
    left = Ideal([g * w for w in J.generators] + [gi * h for gi in I.generators])
    right = Ideal([f * w for w in J.generators] + [v * h for v in m.generators])
    return ideal_equal(IJ, left) and ideal_equal(mJ, right)


def certificate_search(I: Ideal, Q: Ideal, J: Ideal, budget: int = 64,
                       seed: int = 0) -> AGWitness | None:
    """Scan the candidate pools for a verified witness triple; None if exhausted.

    A returned witness is always re-verified with full Groebner equality, so
    false positives are impossible; exhaustion proves nothing.
    """
    if not is_stable(I, Q):
        raise NotStable("certificate search requires I^2 = QI")
    ring, fld = I.ring, I.field
    m = maximal_ideal(ring, fld)
    IJ = _mul(I, J)
    mJ = _mul(m, J)
    IJ_stair, mJ_stair = _stair(IJ), _stair(mJ)
    IJ_min = _min_gens_list(IJ)
    mJ_min = _min_gens_list(mJ)
    i_gens = [g for g in I.generators if not g.is_zero]
    j_gens = [w for w in J.generators if not w.is_zero]
    hs, gs, fs = witness_candidates(I, Q, J, budget=budget, seed=seed)
    for h in hs:
        i_part = [gi * h for gi in i_gens]
        for g in gs:
            parts = [g * w for w in j_gens] + i_part
            if not _sum_equals(IJ, IJ_stair, IJ_min, parts):
                continue
            for f in fs:
                mparts = [f * w for w in j_gens] + [v * h for v in m.generators]
                if _sum_equals(mJ, mJ_stair, mJ_min, mparts):
                    if verify_witness(I, J, f, g, h):
                        return AGWitness(f=f, g=g, h=h)
            break  # the IJ equality held; other g values cannot improve the mJ side
    return None


# -- refutation ----------------------------------------------------------------

def _rank(rows: list[list], fld) -> int:
    m = [row[:] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] != fld.zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = fld.inv(m[rank][col])
        for r in range(rank + 1, len(m)):
            if m[r][col] != fld.zero:
                scale = fld.mul(m[r][col], inv)
                m[r] = [fld.sub(a, fld.mul(scale, b)) for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _sample_vector(rng: random.Random, fld, n: int, space: int) -> list:
    while True:
        draws = [rng.randint(0, space - 1) for _ in range(n)]
        if any(draws):
            return [fld.from_int(d) for d in draws]


def _monomial_rank_data(factors: list[tuple[int, int]], basis_exps: list[tuple[int, int]],
                        j_basis: list[tuple[int, int]]):
    """Index map for the span matrix of {factor * h} inside (top)/(m * top).

    Rows are minimal generators of the top ideal; a product that is not a
    minimal generator lies one step deeper and contributes nothing.
    """
    index = {e: i for i, e in enumerate(basis_exps)}
    cells = []
    for j, gexp in enumerate(factors):
        for i, wexp in enumerate(j_basis):
            prod = (gexp[0] + wexp[0], gexp[1] + wexp[1])
            row = index.get(prod)
            if row is not None:
                cells.append((row, j, i))
    return cells


def _rank_matrix_from_cells(cells, nrows: int, ncols: int, c: list, fld):
    rows = [[fld.zero] * ncols for _ in range(nrows)]
    for row, col, ci in cells:
        rows[row][col] = fld.add(rows[row][col], c[ci])
    return rows


def necessary_bound(I: Ideal, J: Ideal, seed: int = 0, Q: Ideal | None = None,
                    trials: int = 16) -> RefutationData:
    """Minimum over generic h in J of mu(IJ/Ih) + mu(mJ/mh), versus 2(mu(J)-1).

    Both quotient sizes depend only on the class of h in J/mJ and are
    determined by ranks of matrices whose entries are linear in the
    coefficients of h, so sampling h at random computes the generic minimum
    with quantifiable failure probability (reported).
    """
    if Q is not None and not is_stable(I, Q):
        raise NotStable("the generator-count refutation needs I^2 = QI")
    ring, fld = I.ring, I.field
    m = maximal_ideal(ring, fld)
    IJ = _mul(I, J)
    mJ = _mul(m, J)
    mIJ = _mul(m, IJ)
    m2J = _mul(m, mJ)
    mu_IJ = _mu(IJ)
    mu_mJ = _mu(mJ)
    mu_J = _mu(J)
    if mu_J < 2:
        raise ValueError("refutation needs mu(J) >= 2; mu(J) = 1 is the Gorenstein case")
    threshold = 2 * (mu_J - 1)
    j_min = _min_gens_list(J)
    i_min = _min_gens_list(I)
    run_seed = derive_seed(seed, "refuter")
    rng = random.Random(run_seed)

    space = fld.p if isinstance(fld, PrimeField) else _RAND_RANGE
    stair_ok = all(
        s is not None for s in (_stair(I), _stair(J), _stair(IJ), _stair(mJ))
    )
    best_I = best_m = 0
    if stair_ok:
        i_exps = [g.monomial_exponent() for g in i_min]
        j_exps = [w.monomial_exponent() for w in j_min]
        ij_exps = [e for e in _stair(IJ).gens]
        mj_exps = [e for e in _stair(mJ).gens]
        cells_I = _monomial_rank_data(i_exps, ij_exps, j_exps)
        cells_m = _monomial_rank_data([(1, 0), (0, 1)], mj_exps, j_exps)
        for _ in range(trials):
            c = _sample_vector(rng, fld, len(j_exps), space)
            best_I = max(best_I, _rank(
                _rank_matrix_from_cells(cells_I, len(ij_exps), len(i_exps), c, fld), fld))
            best_m = max(best_m, _rank(
                _rank_matrix_from_cells(cells_m, len(mj_exps), 2, c, fld), fld))
    else:
        base_I = _colength(mIJ)
        base_m = _colength(m2J)
        for _ in range(trials):
            c = _sample_vector(rng, fld, len(j_min), space)
            h = Polynomial.zero(ring, fld)
            for ci, w in zip(c, j_min):
                h = h + w.scale(ci)
            span_I = Ideal([gi * h for gi in i_min] + list(mIJ.generators))
            span_m = Ideal([v * h for v in m.generators] + list(m2J.generators))
            best_I = max(best_I, base_I - colength(span_I))
            best_m = max(best_m, base_m - colength(span_m))
    min_sum = mu_IJ + mu_mJ - best_I - best_m
    degree = min(mu_IJ, len(i_min)) + min(mu_mJ, 2)
    failure_bound = float((degree / space) ** trials)
    primes = (fld.p,) if isinstance(fld, PrimeField) else ()
    return RefutationData(
        mu_IJ=mu_IJ, mu_mJ=mu_mJ, mu_J=mu_J, threshold=threshold,
        min_sum=min_sum, rank_I=best_I, rank_m=best_m, trials=trials,
        seeds=(run_seed,), primes=primes, failure_bound=failure_bound,
    )


# -- the pipeline --------------------------------------------------------------

def _lift_ideal(I: Ideal, new_field) -> Ideal:
    """Re-read an ideal over another field via symmetric integer representatives."""
    old = I.field
    gens = []
    for g in I.generators:
        terms = {}
        for e, c in g.terms.items():
            if isinstance(old, PrimeField):
                rep = c - old.p if c > old.p // 2 else c
                terms[e] = new_field.from_int(rep)
            else:
                terms[e] = new_field.fraction(c.numerator, c.denominator)
        gens.append(Polynomial(I.ring, new_field, terms))
    return Ideal(gens)


def classify(I: Ideal, config: ClassifyConfig | None = None) -> AGReport:
    """Full verdict pipeline; deterministic for a fixed (input, seed, field)."""
    cfg = config or ClassifyConfig()
    stair = _stair(I)
    if stair is not None:
        primary = stair.is_m_primary and stair.gens != ((0, 0),)
    else:
        _colength(I)  # raises when no pure variable power leads the basis
        primary = is_origin_primary(I)
    if not primary:
        raise NotZeroDimensional("input ideal is not m-primary at the origin")
    colen = _colength(I)
    o = ideal_order(I)
    mu = _mu(I)
    contracted = mu == o + 1
    integrally_closed = None
    if stair is not None:
        integrally_closed = newton_closure(stair) == stair
    notes: list[str] = []

    base = dict(
        order=o, min_gens=mu, colength=colen, contracted=contracted,
        integrally_closed=integrally_closed, reduction=None, colon_gens=None,
        colon_order=None, colon_min_gens=None, witness=None, refutation=None,
    )

    try:
        reduction = find_reduction(I, seed=cfg.seed, pairs=cfg.reduction_pairs,
                                   cap=cfg.reduction_cap)
    except NoReductionFound as exc:
        notes.append(f"verdict undecided: {exc}")
        return AGReport(verdict=Verdict.UNKNOWN, notes=tuple(notes), **base)
    base["reduction"] = reduction
    if reduction.reduction_number > 1:
        notes.append(
            f"reduction number {reduction.reduction_number} exceeds 1; "
            "the colon-ideal criteria assume a stable ideal")
        return AGReport(verdict=Verdict.UNKNOWN, notes=tuple(notes), **base)

    Q = Ideal(list(reduction.Q))
    J = canonical_colon(I, Q, stable=True)
    j_min = _min_gens_list(J)
    base["colon_gens"] = tuple(j_min)
    base["colon_order"] = ideal_order(J)
    base["colon_min_gens"] = len(j_min)

    if len(j_min) == 1:
        return AGReport(verdict=Verdict.GORENSTEIN, notes=tuple(notes), **base)

    witness = certificate_search(I, Q, J, budget=cfg.certificate_budget,
                                 seed=cfg.seed)
    if witness is not None:
        base["witness"] = witness
        return AGReport(verdict=Verdict.AG_CERTIFIED, notes=tuple(notes), **base)

    refutation = necessary_bound(I, J, seed=cfg.seed, Q=Q,
                                 trials=cfg.refuter_trials)
    base["refutation"] = refutation
    notes.append(
        f"refutation threshold 2*(mu(J)-1) = {refutation.threshold} from the "
        "two-generated bound on the cokernel's maximal-ideal multiple")
    if refutation.min_sum > refutation.threshold:
        confirm = cfg.confirm_prime
        if confirm is None and isinstance(I.field, PrimeField):
            confirm = CONFIRM_PRIME if I.field.p != CONFIRM_PRIME else DEFAULT_SURVEY_PRIME
        if isinstance(I.field, PrimeField) and confirm:
            field2 = PrimeField(confirm)
            I2 = _lift_ideal(I, field2)
            J2 = _lift_ideal(J, field2)
            second = necessary_bound(I2, J2, seed=cfg.seed, trials=cfg.refuter_trials)
            if second.min_sum > second.threshold:
                base["refutation"] = replace(
                    refutation, primes=refutation.primes + second.primes)
                return AGReport(verdict=Verdict.NOT_AG, notes=tuple(notes), **base)
            notes.append("second-prime confirmation disagreed; verdict withheld")
            return AGReport(verdict=Verdict.UNKNOWN, notes=tuple(notes), **base)
        return AGReport(verdict=Verdict.NOT_AG, notes=tuple(notes), **base)

    notes.append("certificate search exhausted and the generator-count bound "
                 "is inconclusive")
    return AGReport(verdict=Verdict.UNKNOWN, notes=tuple(notes), **base)


def validate_report(I: Ideal, report: AGReport) -> bool:
    """Re-check the verdict's supporting evidence with full Groebner equality."""
    if report.verdict is Verdict.GORENSTEIN:
        return report.colon_min_gens == 1
    if report.verdict is Verdict.AG_CERTIFIED:
        w = report.witness
        if w is None or report.colon_gens is None:
            return False
        J = Ideal(list(report.colon_gens))
        return verify_witness(I, J, w.f, w.g, w.h)
    if report.verdict is Verdict.NOT_AG:
        r = report.refutation
        return r is not None and r.min_sum > r.threshold
    return True
