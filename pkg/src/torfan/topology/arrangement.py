"""
The coordinate subspace arrangement of a fan and the asphericity verdicts.

For a primitive collection P the subspace A(P) is {x in R^d : x_j = 0 for j in P}.
Its codimension is |P|, and the complement of the union is the space C_Delta.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from torfan.constants import COMPLETENESS
from torfan.errors import IncompleteFanWithoutBasis, NotSmoothFan
from torfan.fan import Fan, check_complete, check_smooth, is_flag_like, primitive_collections
from torfan.pi1 import mod2_rays
from torfan.racg import CommutationGraph, Word, commutator_abelian, graph_from_fan, in_commutator_subgroup
from torfan.util import gf2
from torfan.util.logging import get_logger

logger = get_logger(__name__)

INCOMPLETE_WARNING = "fan is not complete; arrangement results rely on rays containing a basis of N/2N"


class Subspace(BaseModel):
    model_config = ConfigDict(frozen=True)

    zero_coordinates: Tuple[int, ...]
    codimension: int


class SubspaceArrangement(BaseModel):
    model_config = ConfigDict(frozen=True)

    ambient_dim: int
    subspaces: Tuple[Subspace, ...] = ()
    warnings: Tuple[str, ...] = ()


def is_aspherical(fan: Fan) -> bool:
    """X(fan) is aspherical iff the fan is flag-like."""
    return is_flag_like(fan)


def admission_warnings(fan: Fan) -> List[str]:
    """Check the standing hypotheses of the arrangement operations.

    Smoothness is required. Completeness is required unless the rays contain a
    basis of N/2N, in which case a warning is returned instead.
    """
    verdict = check_smooth(fan)
    if not verdict.smooth:
        raise NotSmoothFan(verdict.witness)
    if check_complete(fan) is COMPLETENESS.COMPLETE:
        return []
    if gf2.rank(mod2_rays(fan)) < fan.dim:
        raise IncompleteFanWithoutBasis()
    logger.warning("arrangement of an incomplete fan", dim=fan.dim, rays=fan.ray_count)
    return [INCOMPLETE_WARNING]


def arrangement(fan: Fan) -> SubspaceArrangement:
    warnings = admission_warnings(fan)
    return SubspaceArrangement(
        ambient_dim=fan.ray_count,
        subspaces=tuple(
            Subspace(zero_coordinates=collection, codimension=len(collection))
            for collection in primitive_collections(fan)
        ),
        warnings=tuple(warnings),
    )


def is_arrangement_k_pi_1(fan: Fan) -> bool:
    """The complement is a K(pi, 1) iff every subspace has codimension 2."""
    return all(s.codimension == 2 for s in arrangement(fan).subspaces)


def is_arrangement_abelian_k_pi_1(fan: Fan) -> bool:
    """K(pi, 1) with abelian pi_1: flag-like, and the codimension 2 subspaces use disjoint coordinates."""
    if not is_arrangement_k_pi_1(fan):
        return False
    return commutator_abelian(graph_from_fan(fan))


class ArrangementPi1(BaseModel):
    """pi_1 of the complement, realized as the commutator subgroup [W, W].

    `normal_generators` are the words [s_p, s_q] for each pair of rays spanning
    no cone; they generate [W, W] as a normal subgroup. Membership is the
    parity test `contains`. `free_abelian_rank` is set only when [W, W] is
    abelian, in which case it is free abelian on one generator per such pair.
    """

    model_config = ConfigDict(frozen=True)

    generator_count: int
    edges: Tuple[Tuple[int, int], ...]
    normal_generators: Tuple[Word, ...]
    commutator_abelian: bool
    free_abelian_rank: Optional[int] = None
    warnings: Tuple[str, ...] = ()

    def graph(self) -> CommutationGraph:
        return CommutationGraph(self.generator_count, self.edges)

    def contains(self, word: Word) -> bool:
        return in_commutator_subgroup(self.graph(), word)


def pi1_arrangement(fan: Fan) -> ArrangementPi1:
    warnings = admission_warnings(fan)
    graph = graph_from_fan(fan)
    pairs = graph.non_edges()
    abelian = commutator_abelian(graph)
    return ArrangementPi1(
        generator_count=graph.generator_count,
        edges=tuple(graph.edges),
        normal_generators=tuple((p, q, p, q) for p, q in pairs),
        commutator_abelian=abelian,
        free_abelian_rank=len(pairs) if abelian else None,
        warnings=tuple(warnings),
    )


def arrangement_fan(fan: Fan) -> Fan:
    """The fan in Z^d with rays e_1..e_d and one cone <e_j : j in sigma> per cone sigma."""
    verdict = check_smooth(fan)
    if not verdict.smooth:
        raise NotSmoothFan(verdict.witness)
    d = fan.ray_count
    rays = [[1 if k == j else 0 for k in range(d)] for j in range(d)]
    return Fan(d, rays, fan.max_cones)
