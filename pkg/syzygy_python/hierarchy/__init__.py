"""Upper bounds for the quadratic strand and diagnostics for Betti tables."""

from .bounds import betti_bound, bound_row, eligible_tables_e_plus_4, extremal_table
from .diagnostics import assess_conditions, kp1_diagnostic, verify_bounds

__all__ = [
    "betti_bound",
    "bound_row",
    "eligible_tables_e_plus_4",
    "extremal_table",
    "assess_conditions",
    "kp1_diagnostic",
    "verify_bounds",
]
