from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from torfan.constants import PRESENTATION_KIND
from torfan.fan import Fan
from torfan.present import format_relator
from torfan.racg import graph_from_fan, inverse, reduce
from torfan.util.logging import get_logger

from .char_matrix import CharMatrixGF2, in_pi1
from .presentations import generator_words, resolve_matrix, rs_presentation, simplified_presentation

logger = get_logger(__name__)


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: PRESENTATION_KIND
    passed: bool
    relators_checked: int = 0
    generators_checked: int = 0
    failing_relator: Optional[str] = None
    failing_generator: Optional[str] = None


def verify_presentation(
    fan: Fan,
    which: PRESENTATION_KIND = PRESENTATION_KIND.FULL,
    matrix: Optional[CharMatrixGF2] = None,
) -> VerificationReport:
    """Check a presentation against W itself.

    Each generator y_{j,t} is sent to T(t) s_j T(t + a_j)^-1. Every relator must
    reduce to the identity in W, and every generator image must lie in the
    kernel of the fan's own phi_hat. Passing `matrix` builds the presentation
    from that matrix instead, which is how corrupted inputs are exercised.
    """
    true_matrix = resolve_matrix(fan, None, None)
    matrix = matrix if matrix is not None else true_matrix

    if which is PRESENTATION_KIND.FULL:
        presentation = rs_presentation(fan, matrix=matrix)
        positions = range(matrix.ray_count)
    else:
        presentation = simplified_presentation(fan, matrix=matrix)
        positions = range(matrix.dim, matrix.ray_count)
    images = generator_words(matrix, positions)
    graph = graph_from_fan(fan)

    for checked, relator in enumerate(presentation.relators):
        word: List[int] = []
        for index, exponent in relator:
            word.extend(images[index] if exponent == 1 else inverse(images[index]))
        if reduce(graph, word):
            text = format_relator(presentation, relator)
            logger.info("relator does not hold in W", kind=which.value, relator=text)
            return VerificationReport(
                kind=which,
                passed=False,
                relators_checked=checked + 1,
                failing_relator=text,
            )

    for checked, (symbol, image) in enumerate(zip(presentation.generators, images)):
        if not in_pi1(true_matrix, image):
            logger.info("generator leaves ker(phi_hat)", kind=which.value, generator=symbol)
            return VerificationReport(
                kind=which,
                passed=False,
                relators_checked=len(presentation.relators),
                generators_checked=checked + 1,
                failing_generator=symbol,
            )

    return VerificationReport(
        kind=which,
        passed=True,
        relators_checked=len(presentation.relators),
        generators_checked=len(presentation.generators),
    )
