from .arrangement import (
    INCOMPLETE_WARNING,
    ArrangementPi1,
    Subspace,
    SubspaceArrangement,
    admission_warnings,
    arrangement,
    arrangement_fan,
    is_arrangement_abelian_k_pi_1,
    is_arrangement_k_pi_1,
    is_aspherical,
    pi1_arrangement,
)
from .quotient import QuotientData, integral_basis, quotient_data
from .smoke import SmokeTestResult, normal_closure_smoke_test

__all__ = [
    "INCOMPLETE_WARNING",
    "ArrangementPi1",
    "QuotientData",
    "SmokeTestResult",
    "Subspace",
    "SubspaceArrangement",
    "admission_warnings",
    "arrangement",
    "arrangement_fan",
    "integral_basis",
    "is_arrangement_abelian_k_pi_1",
    "is_arrangement_k_pi_1",
    "is_aspherical",
    "normal_closure_smoke_test",
    "pi1_arrangement",
    "quotient_data",
]
