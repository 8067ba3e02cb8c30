"""Zero-divisor graphs of finite commutative rings with unity: exact
clique and chromatic solvers, product formulas, and the chi > omega
counterexample family.
"""

from .dsl import elaborate, parse, print_expr, ring_of
from .errors import (
    BeckringError,
    BudgetError,
    CapacityError,
    ContractError,
    DescriptorError,
    ElementError,
    InternalCheckError,
    InvalidModulusError,
    NotARingError,
    ParseError,
    PreconditionError,
)
from .graphs import BeckGraph, CoreGraph, build_graph, core, export_graph
from .rings import (
    FiniteRing,
    Ideal,
    NilradicalProfile,
    field_factor_count,
    ideal_generate,
    ideal_power,
    ideal_product,
    make_anderson_naseer,
    make_product,
    make_quotient,
    make_structure_ring,
    make_zmod,
)
from .solvers import (
    Clique,
    CliqueSplit,
    Coloring,
    SZero,
    best_clique_split,
    chromatic_number,
    max_clique,
    min_s_optimal_coloring,
    s_of,
    verify_clique,
    verify_coloring,
)
from .theorems import (
    chi_bounds,
    check_an_condition,
    counterexample_family,
    nilradical_bound,
    omega_product_formula,
    product_coloring,
    reduced_theorem_check,
    zn_formula,
)

__version__ = "0.1.0"

__all__ = [
    "BeckGraph",
    "BeckringError",
    "BudgetError",
    "CapacityError",
    "Clique",
    "CliqueSplit",
    "Coloring",
    "ContractError",
    "CoreGraph",
    "DescriptorError",
    "ElementError",
    "FiniteRing",
    "Ideal",
    "InternalCheckError",
    "InvalidModulusError",
    "NilradicalProfile",
    "NotARingError",
    "ParseError",
    "PreconditionError",
    "SZero",
    "best_clique_split",
    "build_graph",
    "chi_bounds",
    "check_an_condition",
    "chromatic_number",
    "core",
    "counterexample_family",
    "elaborate",
    "export_graph",
    "field_factor_count",
    "ideal_generate",
    "ideal_power",
    "ideal_product",
    "make_anderson_naseer",
    "make_product",
    "make_quotient",
    "make_structure_ring",
    "make_zmod",
    "max_clique",
    "min_s_optimal_coloring",
    "nilradical_bound",
    "omega_product_formula",
    "parse",
    "print_expr",
    "product_coloring",
    "reduced_theorem_check",
    "ring_of",
    "s_of",
    "verify_clique",
    "verify_coloring",
    "zn_formula",
]
