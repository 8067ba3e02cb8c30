"""Product formulas, bounds, and constructions for clique and chromatic
numbers of Beck graphs, each evaluated with an explicit certificate.

The clique number of a finite product decomposes over the factors once
each factor's maximum clique is split into square-zero members B and the
rest C, picking among maximum cliques one with |B| largest:

    omega(R_1 x ... x R_n) = prod |B_i| + sum |C_i|

realized by the clique (B_1 x ... x B_n) together with each C_i embedded
on its axis. The chromatic number of a product is sandwiched by

    sum chi_i - (n - 1)  <=  chi  <=  sum (chi_i - s_i) + prod s_i

where s_i counts color classes of a proper coloring of R_i containing a
square-zero element; the upper bound is realized by an explicit coloring
that this module materializes and re-verifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iter_product

import numpy as np

from .errors import ContractError, InternalCheckError, InvalidModulusError, PreconditionError
from .graphs import build_graph
from .rings import FiniteRing, field_factor_count, ideal_power, make_product
from .solvers import (
    Clique,
    CliqueSplit,
    Coloring,
    best_clique_split,
    chromatic_number,
    max_clique,
    min_s_optimal_coloring,
    s_of,
    verify_coloring,
)

# direct cross-check solves are attempted only below this product size
DEFAULT_DIRECT_CAP = 512


# ---------------------------------------------------------------------------
# clique number of products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OmegaPrediction:
    splits: tuple[CliqueSplit, ...]
    predicted: int
    witness: Clique
    product_size: int

    @property
    def per_factor(self) -> list[tuple[int, int, int]]:
        """(omega_i, |B_i|, |C_i|) per factor."""
        return [(s.clique.size, s.b_size, s.c_size) for s in self.splits]


def omega_product_formula(
    factors: list[FiniteRing], budget: float | None = None
) -> OmegaPrediction:
    """Evaluate prod |B_i| + sum |C_i| and materialize the witness clique."""
    if not factors:
        raise PreconditionError("omega_product_formula needs at least one factor")
    splits = tuple(best_clique_split(build_graph(f), budget) for f in factors)
    predicted = math.prod(s.b_size for s in splits) + sum(s.c_size for s in splits)
    ring = make_product(list(factors)) if len(factors) > 1 else factors[0]
    witness = _materialize_witness(ring, factors, splits)
    return OmegaPrediction(splits, predicted, witness, ring.size)


def _materialize_witness(ring, factors, splits) -> Clique:
    if len(factors) == 1:
        verts = list(splits[0].clique.vertices)
    else:
        verts = [ring.encode(combo) for combo in iter_product(*[s.b_part for s in splits])]
        for i, split in enumerate(splits):
            for c in split.c_part:
                coords = [0] * len(factors)
                coords[i] = c
                verts.append(ring.encode(tuple(coords)))
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if ring.mul(u, v) != 0:
                raise InternalCheckError(
                    f"witness clique has nonzero product {ring.element_str(u)}*{ring.element_str(v)}"
                )
    return Clique(tuple(sorted(verts)))


# ---------------------------------------------------------------------------
# chromatic bounds of products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorColoring:
    chi: int
    s: int
    s_exact: bool
    coloring: Coloring


@dataclass(frozen=True)
class ChiBounds:
    factors: tuple[FactorColoring, ...]
    lower: int
    upper: int
    s_mode: str


def _normalize_s_mode(s_mode: str) -> str:
    mode = s_mode.lower()
    if mode in ("any", "any_optimal"):
        return "any_optimal"
    if mode in ("min", "min_s"):
        return "min_s"
    raise PreconditionError(f"unknown s_mode {s_mode!r} (expected any_optimal or min_s)")


def factor_coloring(ring: FiniteRing, s_mode: str, budget: float | None = None) -> FactorColoring:
    g = build_graph(ring)
    mode = _normalize_s_mode(s_mode)
    if mode == "min_s":
        coloring, sz = min_s_optimal_coloring(g, budget)
        return FactorColoring(coloring.k, sz.s, sz.exact, coloring)
    chi, coloring = chromatic_number(g, budget)
    return FactorColoring(chi, s_of(g, coloring).s, True, coloring)


def chi_bounds(
    factors: list[FiniteRing],
    s_mode: str = "any_optimal",
    budget: float | None = None,
) -> ChiBounds:
    if not factors:
        raise PreconditionError("chi_bounds needs at least one factor")
    mode = _normalize_s_mode(s_mode)
    cols = tuple(factor_coloring(f, mode, budget) for f in factors)
    n = len(cols)
    lower = sum(c.chi for c in cols) - (n - 1)
    upper = sum(c.chi - c.s for c in cols) + math.prod(c.s for c in cols)
    return ChiBounds(cols, lower, upper, mode)


def product_coloring(
    r1: FiniteRing, c1: Coloring, r2: FiniteRing, c2: Coloring
) -> Coloring:
    """The explicit proper coloring of r1 x r2 with exactly
    s1*s2 + (k1 - s1) + (k2 - s2) colors built from proper colorings of the
    factors; square-zero-bearing classes are moved to the front first
    (stably by original index), and the result is re-verified before return.
    """
    g1, g2 = build_graph(r1), build_graph(r2)
    if not verify_coloring(g1, c1):
        raise ContractError("first coloring is not proper for its ring")
    if not verify_coloring(g2, c2):
        raise ContractError("second coloring is not proper for its ring")
    perm1, s1 = _bearing_first(r1, c1)
    perm2, s2 = _bearing_first(r2, c2)
    k1, k2 = c1.k, c2.k
    rp = make_product([r1, r2])
    total = s1 * s2 + (k1 - s1) + (k2 - s2)
    assign = [0] * rp.size
    for a in range(rp.size):
        x, y = rp.decode(a)
        i = perm1[c1.class_of[x]]
        j = perm2[c2.class_of[y]]
        if i < s1 and j < s2:
            color = s2 * i + j
        elif i < s1:
            color = s1 * s2 + (j - s2)
        else:
            color = s1 * s2 + (k2 - s2) + (i - s1)
        assign[a] = color
    coloring = Coloring(tuple(assign), total)
    if not verify_coloring(build_graph(rp), coloring):
        raise InternalCheckError("product coloring construction produced an improper coloring")
    return coloring


def _bearing_first(ring: FiniteRing, c: Coloring) -> tuple[list[int], int]:
    """Map old class index -> new, square-zero-bearing classes first."""
    bearing = [False] * c.k
    mask = ring.square_zero_mask
    for v, cls in enumerate(c.class_of):
        if mask[v]:
            bearing[cls] = True
    order = [i for i in range(c.k) if bearing[i]] + [i for i in range(c.k) if not bearing[i]]
    perm = [0] * c.k
    for new, old in enumerate(order):
        perm[old] = new
    return perm, sum(bearing)


# ---------------------------------------------------------------------------
# Z_N closed form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZnFormula:
    n: int
    value: int
    factorization: tuple[tuple[int, int], ...]


def zn_formula(n: int) -> ZnFormula:
    """prod p^floor(e/2) over the prime factorization, plus the number of
    odd-exponent primes."""
    if n < 1:
        raise InvalidModulusError(f"Z_N formula needs N >= 1, got {n}")
    factorization = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factorization.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factorization.append((m, 1))
    value = math.prod(p ** (e // 2) for p, e in factorization)
    value += sum(1 for _, e in factorization if e % 2 == 1)
    return ZnFormula(n, value, tuple(factorization))


# ---------------------------------------------------------------------------
# nilpotency-index lower bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NilFactor:
    index: int
    parity: str  # "even" (index 2n) or "odd" (index 2m-1)
    param: int
    power_size: int


@dataclass(frozen=True)
class NilBound:
    factors: tuple[NilFactor, ...]
    r_count: int
    bound: int
    omega: int | None
    holds: bool | None


def classify_nil_factor(ring: FiniteRing) -> NilFactor:
    profile = ring.nilradical()
    m = profile.index_of_nilpotency
    if m % 2 == 0:
        param = m // 2
        return NilFactor(m, "even", param, profile.power_sizes[param - 1])
    param = (m + 1) // 2
    return NilFactor(m, "odd", param, profile.power_sizes[param - 1])


def nilradical_bound(
    factors: list[FiniteRing],
    budget: float | None = None,
    direct_cap: int = DEFAULT_DIRECT_CAP,
) -> NilBound:
    """prod |J_i^(n_i or m_i)| + r lower-bounds the product's clique number;
    reduced factors count as odd type with m = 1 (|J^1| = 1, contributing +1)."""
    if not factors:
        raise PreconditionError("nilradical_bound needs at least one factor")
    if any(f.size < 2 for f in factors):
        raise PreconditionError("nilradical_bound needs nonzero factors")
    infos = tuple(classify_nil_factor(f) for f in factors)
    r_count = sum(1 for i in infos if i.parity == "odd")
    bound = math.prod(i.power_size for i in infos) + r_count
    size = math.prod(f.size for f in factors)
    omega = holds = None
    if size <= direct_cap:
        ring = make_product(list(factors)) if len(factors) > 1 else factors[0]
        omega = max_clique(build_graph(ring), budget).size
        holds = omega >= bound
    return NilBound(infos, r_count, bound, omega, holds)


# ---------------------------------------------------------------------------
# the zero-product membership condition implying equality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ANConditionResult:
    kind: str
    param: int
    holds: bool
    membership_ok: bool
    boundary_ok: bool | None
    witness: tuple[int, int] | None


def check_an_condition(ring: FiniteRing, kind: str, param: int) -> ANConditionResult:
    """Exhaustively check, over all pairs with x*y = 0:

    even type (index 2n, param n): x in J^n or y in J^n, and additionally
    if x not in J^(n+1) then y in J^n;
    odd type (index 2m-1, param m): x in J^m or y in J^m.
    """
    profile = ring.nilradical()
    m = profile.index_of_nilpotency
    if kind == "even":
        if m != 2 * param:
            raise PreconditionError(f"ring has nilpotency index {m}, not even 2*{param}")
    elif kind == "odd":
        if m != 2 * param - 1:
            raise PreconditionError(f"ring has nilpotency index {m}, not odd 2*{param}-1")
    else:
        raise PreconditionError(f"kind must be 'even' or 'odd', got {kind!r}")
    jp = ideal_power(profile.ideal, param) if param >= 1 else None
    in_jp = np.zeros(ring.size, dtype=bool)
    in_jp[list(jp.elements)] = True
    in_jp1 = None
    if kind == "even":
        jp1 = ideal_power(profile.ideal, param + 1)
        in_jp1 = np.zeros(ring.size, dtype=bool)
        in_jp1[list(jp1.elements)] = True
    membership_ok = True
    boundary_ok = True if kind == "even" else None
    witness = None
    rel = ring.zero_rel_matrix
    for x in range(ring.size):
        ys = np.flatnonzero(rel[x])
        if ys.size == 0:
            continue
        if not in_jp[x]:
            bad = ys[~in_jp[ys]]
            if bad.size:
                membership_ok = False
                witness = witness or (int(x), int(bad[0]))
        if kind == "even" and not in_jp1[x]:
            bad = ys[~in_jp[ys]]
            if bad.size:
                boundary_ok = False
                witness = witness or (int(x), int(bad[0]))
    holds = membership_ok and (boundary_ok is not False)
    return ANConditionResult(kind, param, holds, membership_ok, boundary_ok, witness)


def an_condition_for(ring: FiniteRing) -> ANConditionResult:
    """Classify the ring's nilpotency index and run the matching check."""
    info = classify_nil_factor(ring)
    return check_an_condition(ring, info.parity, info.param)


# ---------------------------------------------------------------------------
# reduced rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReducedCheck:
    r_count: int
    omega: int
    chi: int
    consistent: bool


def reduced_theorem_check(ring: FiniteRing, budget: float | None = None) -> ReducedCheck:
    """For finite reduced rings, chi = omega = (number of field factors) + 1."""
    if not ring.is_reduced():
        raise PreconditionError("reduced_theorem_check requires a reduced ring")
    r_count = field_factor_count(ring)
    g = build_graph(ring)
    omega = max_clique(g, budget).size
    chi, _ = chromatic_number(g, budget)
    return ReducedCheck(r_count, omega, chi, omega == chi == r_count + 1)


# ---------------------------------------------------------------------------
# the counterexample family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyReport:
    an_variant: int
    factor_names: tuple[str, ...]
    product_size: int
    omega: int
    chi: int
    gap: int
    chi_lower: int
    constructed_colors: int
    direct_omega: int | None


def counterexample_family(
    reduced_factors: list[FiniteRing],
    budget: float | None = None,
    direct_omega_cap: int = 128,
) -> FamilyReport:
    """The built-in local ring times any nonzero reduced rings always has
    chi exactly one above omega.

    omega comes from the product clique formula; chi is certified by
    pinching: the lower bound sum chi_i - (n-1) meets the size of the
    explicitly constructed product coloring. A direct clique solve
    cross-checks omega when the product is small enough.
    """
    from .catalog import canonical_an_variant, canonical_anderson_naseer

    for f in reduced_factors:
        if f.size < 2:
            raise PreconditionError("family factors must be nonzero rings")
        if not f.is_reduced():
            raise PreconditionError(f"family factor {f!r} is not reduced")
    an = canonical_anderson_naseer()
    chain = [an] + list(reduced_factors)
    prediction = omega_product_formula(chain, budget)
    omega = prediction.predicted

    colorings = []
    for f in chain:
        chi_f, col_f = chromatic_number(build_graph(f), budget)
        colorings.append((f, chi_f, col_f))
    lower = sum(chi_f for _, chi_f, _ in colorings) - (len(chain) - 1)

    cur_ring, _, cur_col = colorings[0]
    for f, _, col_f in colorings[1:]:
        cur_col = product_coloring(cur_ring, cur_col, f, col_f)
        cur_ring = make_product([cur_ring, f])
    constructed = cur_col.k
    if constructed != lower:
        raise InternalCheckError(
            f"coloring construction used {constructed} colors but the lower bound is {lower}"
        )
    chi = lower

    direct_omega = None
    if prediction.product_size <= direct_omega_cap:
        ring = make_product(chain) if len(chain) > 1 else chain[0]
        direct_omega = max_clique(build_graph(ring), budget).size
    return FamilyReport(
        canonical_an_variant(),
        tuple(repr(f) for f in reduced_factors),
        prediction.product_size,
        omega,
        chi,
        chi - omega,
        lower,
        constructed,
        direct_omega,
    )
