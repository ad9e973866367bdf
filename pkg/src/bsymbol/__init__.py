"""b-symbol weights, generalized Hamming weights and cyclic codes over small finite fields."""

__version__ = "0.1.0"

from .algebra import FieldSpec, Poly, factor_xn_minus_1, field_new, field_of_size
from .bounds import BoundReport
from .codes import (
    BudgetExceeded,
    CyclicCode,
    LinearCode,
    cyclic_from_gen,
    enumerate_cyclic_codes,
    irreducible_cyclic,
    parse_descriptor,
    simplex,
)
from .explorer import SearchSpec, run_conjecture_search, run_theorem_harness, write_reports
from .hierarchy import b_symbol_hierarchy, generalized_hierarchy, min_b_symbol_distance
from .metrics import b_support, pi_b, run_distribution, w_b_direct, w_b_from_runs, w_b_via_span

__all__ = [
    "BoundReport",
    "BudgetExceeded",
    "CyclicCode",
    "FieldSpec",
    "LinearCode",
    "Poly",
    "SearchSpec",
    "b_support",
    "b_symbol_hierarchy",
    "cyclic_from_gen",
    "enumerate_cyclic_codes",
    "factor_xn_minus_1",
    "field_new",
    "field_of_size",
    "generalized_hierarchy",
    "irreducible_cyclic",
    "min_b_symbol_distance",
    "parse_descriptor",
    "pi_b",
    "run_conjecture_search",
    "run_distribution",
    "run_theorem_harness",
    "simplex",
    "w_b_direct",
    "w_b_from_runs",
    "w_b_via_span",
    "write_reports",
]
