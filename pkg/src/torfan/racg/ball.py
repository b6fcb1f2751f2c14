from typing import List, Optional, Set

from torfan.config import settings
from torfan.errors import RadiusCapExceeded
from torfan.util.logging import get_logger

from .graph import CommutationGraph
from .words import NormalForm, reduce

logger = get_logger(__name__)


def enumerate_ball(
    graph: CommutationGraph, radius: int, cap: Optional[int] = None
) -> List[NormalForm]:
    """All elements of length at most `radius`, in shortlex order of normal forms.

    Sphere k+1 is generated from sphere k by right multiplication with each
    generator, keeping products that got longer.
    """
    cap = settings.BALL_RADIUS_CAP if cap is None else cap
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if radius > cap:
        raise RadiusCapExceeded(radius, cap)

    ball: List[NormalForm] = [()]
    sphere: List[NormalForm] = [()]
    for length in range(1, radius + 1):
        seen: Set[NormalForm] = set()
        for element in sphere:
            for generator in range(graph.generator_count):
                product = reduce(graph, element + (generator,))
                if len(product) == length:
                    seen.add(product)
        sphere = sorted(seen)
        if not sphere:
            break
        ball.extend(sphere)
    logger.debug("ball enumerated", radius=radius, size=len(ball))
    return ball
