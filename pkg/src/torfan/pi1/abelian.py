from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from torfan.constants import ABELIAN_CASE, ELEMENT_ORDER
from torfan.errors import BasisNotPairwiseConical, NotAbelian, NotInPi1
from torfan.fan import Fan
from torfan.racg import (
    CommutationGraph,
    NormalForm,
    commutator_abelian,
    equal,
    graph_from_fan,
    inverse,
    order,
    reduce,
)
from torfan.util.logging import get_logger

from .char_matrix import CharMatrixGF2, in_pi1
from .presentations import resolve_matrix, s_word

logger = get_logger(__name__)


class AbelianVerdict(BaseModel):
    """Outcome of the abelianness criterion.

    `step` names the first violated condition when non-abelian:
    1 a generator misses two or more others, 3 a non-basis ray's partner is
    outside the basis, 4 another non-basis ray pairs oddly with that partner,
    5 a ray pairs evenly with its own partner. `partners` maps each non-basis
    ray to the basis ray it does not span a cone with (original indices).
    """

    model_config = ConfigDict(frozen=True)

    case: ABELIAN_CASE
    step: Optional[int] = None
    detail: str = ""
    partners: Dict[int, int] = {}

    @property
    def abelian(self) -> bool:
        return self.case is not ABELIAN_CASE.NON_ABELIAN


class AbelianStructure(BaseModel):
    """pi_1 = Z^free_rank + Z_2^torsion_rank."""

    model_config = ConfigDict(frozen=True)

    free_rank: int
    torsion_rank: int

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        if self.torsion_rank:
            parts.append("Z/2" if self.torsion_rank == 1 else f"(Z/2)^{self.torsion_rank}")
        return " + ".join(parts) if parts else "0"


def _pairwise_matrix(fan: Fan) -> CharMatrixGF2:
    matrix = resolve_matrix(fan, None, None)
    if not matrix.selection.basis_is_pairwise_conical:
        raise BasisNotPairwiseConical(matrix.selection.basis_ray_indices)
    return matrix


def _non_abelian(step: int, detail: str) -> AbelianVerdict:
    logger.debug("pi1 is not abelian", step=step, detail=detail)
    return AbelianVerdict(case=ABELIAN_CASE.NON_ABELIAN, step=step, detail=detail)


def _verdict(graph: CommutationGraph, matrix: CharMatrixGF2) -> AbelianVerdict:
    if not commutator_abelian(graph):
        j = next(v for v in range(graph.generator_count) if len(graph.non_neighbors(v)) > 1)
        return _non_abelian(
            1, f"ray {j} spans no cone with rays {sorted(graph.non_neighbors(j))}"
        )
    if not graph.non_edges():
        return AbelianVerdict(case=ABELIAN_CASE.CASE_I)

    n = matrix.dim
    partners: Dict[int, int] = {}
    for position in range(n, matrix.ray_count):
        ray = matrix.original(position)
        missing = graph.non_neighbors(ray)
        if missing:
            partners[ray] = missing.pop()

    for ray, partner in partners.items():
        if matrix.position(partner) >= n:
            return _non_abelian(
                3, f"ray {ray} spans no cone with non-basis ray {partner}"
            )
    for ray, partner in partners.items():
        column = matrix.position(partner)
        for position in range(n, matrix.ray_count):
            other = matrix.original(position)
            if other != ray and matrix.entries[position, column]:
                return _non_abelian(
                    4, f"a[{other}][{partner}] = 1 although {partner} is the partner of ray {ray}"
                )
    for ray, partner in partners.items():
        if not matrix.row(ray)[matrix.position(partner)]:
            return _non_abelian(5, f"a[{ray}][{partner}] = 0 for the partner of ray {ray}")

    return AbelianVerdict(case=ABELIAN_CASE.CASE_II, partners=partners)


def is_pi1_abelian(fan: Fan) -> AbelianVerdict:
    return _verdict(graph_from_fan(fan), _pairwise_matrix(fan))


def abelian_structure(fan: Fan) -> AbelianStructure:
    """(r, d - n - r) where r counts non-basis rays that have a partner."""
    verdict = is_pi1_abelian(fan)
    if not verdict.abelian:
        raise NotAbelian(verdict.step, verdict.detail)
    r = len(verdict.partners)
    return AbelianStructure(free_rank=r, torsion_rank=fan.ray_count - fan.dim - r)


def torsion_of_pi1_element(fan: Fan, word: Sequence[int]) -> ELEMENT_ORDER:
    """Order in pi_1 of an element given as a word in W; torsion is always of order 2."""
    matrix = resolve_matrix(fan, None, None)
    if not in_pi1(matrix, word):
        raise NotInPi1(word)
    return order(graph_from_fan(fan), word)


class CommutatorIdentity(BaseModel):
    """[S_k, S_j] for a pair violating the cross-zero condition, next to the closed form.

    `case` numbers the pair (a[k][i_k], a[j][i_k]): 1 for (0,0), 2 for (1,1),
    3 for (1,0), 4 for (0,1). A ray k without a partner counts as case 1.
    """

    model_config = ConfigDict(frozen=True)

    j: int
    k: int
    case: int
    commutator: NormalForm
    closed_form: NormalForm
    matches: bool
    nontrivial: bool


_CASES = {(0, 0): 1, (1, 1): 2, (1, 0): 3, (0, 1): 4}


def _commutator(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(a) + tuple(b) + inverse(a) + inverse(b)


def commutator_identities(fan: Fan) -> List[CommutatorIdentity]:
    """Evaluate [S_k, S_j] in W for every pair j != k with a[k][i_j] = 1.

    Only fans whose commutator subgroup is abelian and whose partners all lie in
    the basis have well-defined i_j; anything else yields an empty list.
    """
    matrix = _pairwise_matrix(fan)
    graph = graph_from_fan(fan)
    if not commutator_abelian(graph):
        return []

    n = matrix.dim
    non_basis = [matrix.original(p) for p in range(n, matrix.ray_count)]
    partners = {}
    for ray in non_basis:
        missing = graph.non_neighbors(ray)
        if missing:
            partners[ray] = next(iter(missing))
    if any(matrix.position(partner) >= n for partner in partners.values()):
        return []

    identities = []
    for j, i_j in partners.items():
        for k in non_basis:
            if k == j or not matrix.row(k)[matrix.position(i_j)]:
                continue
            commutator = reduce(
                graph,
                _commutator(s_word(matrix, matrix.position(k)), s_word(matrix, matrix.position(j))),
            )
            closed = _commutator((i_j,), (j,))
            case = 1
            if k in partners:
                i_k = partners[k]
                column = matrix.position(i_k)
                case = _CASES[(int(matrix.row(k)[column]), int(matrix.row(j)[column]))]
                if case in (3, 4):
                    closed += _commutator((k,), (i_k,))
            closed_form = reduce(graph, closed)
            identities.append(
                CommutatorIdentity(
                    j=j,
                    k=k,
                    case=case,
                    commutator=commutator,
                    closed_form=closed_form,
                    matches=equal(graph, commutator, closed_form),
                    nontrivial=len(commutator) > 0,
                )
            )
    return identities
