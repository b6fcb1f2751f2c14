from typing import List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict

from torfan.config import settings
from torfan.fan import Fan, primitive_collections
from torfan.racg import NormalForm, Word, enumerate_ball, graph_from_fan, inverse, multiply, reduce
from torfan.util.logging import get_logger

logger = get_logger(__name__)


class SmokeTestResult(BaseModel):
    """Bounded search for a cone word inside the normal closure of a non-cone clique word.

    A clean result only says nothing was found within the bounds; the search
    is never exhaustive.
    """

    model_config = ConfigDict(frozen=True)

    collection: Tuple[int, ...]
    conjugator_radius: int
    max_factors: int
    elements_examined: int
    counterexample: Optional[NormalForm] = None
    exhaustive: bool = False


def normal_closure_smoke_test(
    fan: Fan,
    conjugator_radius: Optional[int] = None,
    max_factors: int = 3,
) -> List[SmokeTestResult]:
    """For each primitive collection of size >= 3, search products of conjugates of its word.

    The word w' of a collection is the product of its generators; its rays
    pairwise span cones while the whole set does not. A product of at most
    `max_factors` conjugates v w' v^-1, with |v| <= `conjugator_radius`, that
    reduces to a nonempty word of a cone would be a counterexample.
    """
    radius = settings.CONJUGATOR_RADIUS if conjugator_radius is None else conjugator_radius
    graph = graph_from_fan(fan)
    cone_words: Set[NormalForm] = {reduce(graph, face) for face in fan.closure if face}
    conjugators = enumerate_ball(graph, radius, cap=max(radius, settings.BALL_RADIUS_CAP))

    results = []
    for collection in primitive_collections(fan):
        if len(collection) < 3:
            continue
        w_prime: Word = tuple(collection)
        conjugates = sorted({reduce(graph, v + w_prime + inverse(v)) for v in conjugators})
        products: Set[NormalForm] = set(conjugates)
        frontier: Set[NormalForm] = set(conjugates)
        for _ in range(max_factors - 1):
            frontier = {multiply(graph, x, c) for x in frontier for c in conjugates}
            products |= frontier
        counterexample = min((p for p in products if p in cone_words), default=None)
        if counterexample is not None:
            logger.warning(
                "cone word found in a normal closure",
                collection=list(collection),
                word=list(counterexample),
            )
        results.append(
            SmokeTestResult(
                collection=collection,
                conjugator_radius=radius,
                max_factors=max_factors,
                elements_examined=len(products),
                counterexample=counterexample,
            )
        )
    return results
