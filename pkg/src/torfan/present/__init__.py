from ._presentation import (
    AbelianInvariants,
    Letter,
    Presentation,
    Relator,
    abelianize,
    drop_trivial_relators,
    exponent_sum_matrix,
    free_reduce,
)
from .export import export_presentation, format_relator, parse_machine
from .snf import SmithDecomposition, smith_decomposition, smith_normal_form

__all__ = [
    "AbelianInvariants",
    "Letter",
    "Presentation",
    "Relator",
    "SmithDecomposition",
    "abelianize",
    "drop_trivial_relators",
    "exponent_sum_matrix",
    "export_presentation",
    "format_relator",
    "free_reduce",
    "parse_machine",
    "smith_decomposition",
    "smith_normal_form",
]
