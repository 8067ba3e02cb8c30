"""Built-in rings: the test catalog and the canonical 32-element local ring.

The built-in local ring exists in two candidate variants (z^2 = 0 and
z^2 = 2) because its defining relations admit either reading; the
canonical one is whichever the exact solvers certify to have clique
number 5 and chromatic number 6. That choice is computed once and cached,
never assumed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import InternalCheckError
from .graphs import build_graph
from .rings import FiniteRing, make_anderson_naseer
from .solvers import chromatic_number, max_clique

CATALOG_EXPRS = ("Z2", "Z3", "Z4", "Z8", "Z9", "Z12", "Z2[t]/(t^2)", "AN")
FIELD_EXPRS = ("Z2", "Z3", "Z5", "Z7", "Z2[t]/(t^2+t+1)")

AN_TARGET = (5, 6)


@lru_cache(maxsize=None)
def an_variant_stats() -> dict[int, tuple[int, int]]:
    """(clique number, chromatic number) for both z^2 variants."""
    out = {}
    for variant in (0, 2):
        g = build_graph(make_anderson_naseer(variant))
        omega = max_clique(g).size
        chi, _ = chromatic_number(g)
        out[variant] = (omega, chi)
    return out


@lru_cache(maxsize=None)
def canonical_an_variant() -> int:
    stats = an_variant_stats()
    hits = [v for v, oc in stats.items() if oc == AN_TARGET]
    if len(hits) != 1:
        raise InternalCheckError(
            f"expected exactly one variant with (omega, chi) = {AN_TARGET}, got {stats}"
        )
    return hits[0]


@lru_cache(maxsize=None)
def canonical_anderson_naseer() -> FiniteRing:
    ring = make_anderson_naseer(canonical_an_variant())
    ring.name = "AN"
    return ring


@lru_cache(maxsize=None)
def catalog_rings() -> dict[str, FiniteRing]:
    from .dsl import ring_of

    return {expr: ring_of(expr) for expr in CATALOG_EXPRS}


@lru_cache(maxsize=None)
def field_rings() -> dict[str, FiniteRing]:
    from .dsl import ring_of

    return {expr: ring_of(expr) for expr in FIELD_EXPRS}


def catalog_tuples(arity: int, max_product: int) -> list[tuple[str, ...]]:
    """Unordered catalog factor lists of the given arity within a size cap."""
    rings = catalog_rings()
    out = []
    for names in combinations_with_replacement(CATALOG_EXPRS, arity):
        size = 1
        for name in names:
            size *= rings[name].size
        if size <= max_product:
            out.append(names)
    return out
