"""P-recursive sequences and their closure properties."""
from .closure import rec_product, rec_section, rec_sum
from .recurrence import IllPosedRecurrence, PRecurrence, integer_roots, largest_integer_root, rec_eval

__all__ = [
    "PRecurrence", "IllPosedRecurrence", "rec_eval", "integer_roots", "largest_integer_root",
    "rec_sum", "rec_product", "rec_section",
]
from .algebraic import AlgebraicEquation, algebraic_series, algebraic_to_recurrence, branch_data, differential_relation
from .checks import NonvanishingReport, bezivin_shift_check, nonvanishing_scan
from .guess import rec_guess, required_terms

__all__ += [
    "AlgebraicEquation", "algebraic_series", "algebraic_to_recurrence", "branch_data", "differential_relation",
    "NonvanishingReport", "bezivin_shift_check", "nonvanishing_scan", "rec_guess", "required_terms",
]
