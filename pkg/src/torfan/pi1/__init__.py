from .abelian import (
    AbelianStructure,
    AbelianVerdict,
    CommutatorIdentity,
    abelian_structure,
    commutator_identities,
    is_pi1_abelian,
    torsion_of_pi1_element,
)
from .basis import BasisSelection, choose_basis, mod2_rays
from .char_matrix import CharMatrixGF2, char_matrix, connectedness, in_pi1, phi_hat
from .presentations import (
    coset_index,
    cosets,
    generator_name,
    generator_words,
    pi1_generators_in_W,
    rs_presentation,
    s_word,
    simplified_presentation,
    transversal,
)
from .report import Pi1Report, analyze_pi1
from .verify import VerificationReport, verify_presentation

__all__ = [
    "AbelianStructure",
    "AbelianVerdict",
    "BasisSelection",
    "CharMatrixGF2",
    "CommutatorIdentity",
    "Pi1Report",
    "VerificationReport",
    "abelian_structure",
    "analyze_pi1",
    "char_matrix",
    "choose_basis",
    "commutator_identities",
    "connectedness",
    "coset_index",
    "cosets",
    "generator_name",
    "generator_words",
    "in_pi1",
    "is_pi1_abelian",
    "mod2_rays",
    "phi_hat",
    "pi1_generators_in_W",
    "rs_presentation",
    "s_word",
    "simplified_presentation",
    "torsion_of_pi1_element",
    "transversal",
    "verify_presentation",
]
