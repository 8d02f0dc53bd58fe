from .measurement import (
    MeasurementDirection, OracleResult,
    conditional_entropy_for_direction, minimize_conditional_entropy,
    oracle_classical_correlation, fibonacci_sphere,
)
from .povm import CompletenessError, povm_sanity_scan
from .verify import closed_form_min_entropy, verify_closed_form, passed
