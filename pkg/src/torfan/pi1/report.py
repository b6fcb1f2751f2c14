from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from torfan.fan import Fan
from torfan.present import AbelianInvariants, Presentation, abelianize
from torfan.util.logging import get_logger

from .abelian import AbelianStructure, AbelianVerdict, abelian_structure, is_pi1_abelian
from .basis import BasisSelection, choose_basis
from .char_matrix import char_matrix, connectedness
from .presentations import rs_presentation, simplified_presentation

logger = get_logger(__name__)


class Pi1Report(BaseModel):
    """Everything known about pi_1 of one fan.

    `abelian` and the simplified presentation need a pairwise conical basis and
    stay empty otherwise. `structure` is present exactly when pi_1 is abelian.
    """

    model_config = ConfigDict(frozen=True)

    connected: bool
    component_count: int
    basis: Optional[BasisSelection] = None
    char_matrix: Optional[List[List[int]]] = None
    abelian: Optional[AbelianVerdict] = None
    structure: Optional[AbelianStructure] = None
    abelianization: Optional[AbelianInvariants] = None
    presentation_full: Optional[Presentation] = None
    presentation_simplified: Optional[Presentation] = None


def analyze_pi1(fan: Fan) -> Pi1Report:
    connected, components = connectedness(fan)
    if not connected:
        logger.info("fan is disconnected", component_count=components)
        return Pi1Report(connected=False, component_count=components)

    selection = choose_basis(fan)
    matrix = char_matrix(fan, selection)
    full = rs_presentation(fan, matrix=matrix)
    report = {
        "connected": True,
        "component_count": 1,
        "basis": selection,
        "char_matrix": matrix.as_lists(),
        "abelianization": abelianize(full),
        "presentation_full": full,
    }
    if selection.basis_is_pairwise_conical:
        verdict = is_pi1_abelian(fan)
        report["abelian"] = verdict
        report["presentation_simplified"] = simplified_presentation(fan, matrix=matrix)
        if verdict.abelian:
            report["structure"] = abelian_structure(fan)
    else:
        logger.info(
            "basis rays do not pairwise span cones",
            basis=list(selection.basis_ray_indices),
        )
    return Pi1Report(**report)
