"""
Reidemeister-Schreier presentations of pi_1(X) = ker(phi_hat) inside W.

Cosets of the kernel are labelled by t in Z_2^n, with Schreier transversal
T(t) = s_1^t_1 ... s_n^t_n over the basis generators. The generator y_{j,t}
stands for T(t) s_j T(t + a_j)^-1. Rewriting a positive word from coset t emits
y_{j,c} for each letter s_j while tracking the coset c -> c + a_j.

Indices j are 1-based positions in basis-first order in generator names, and
0-based positions in code. Cosets run in binary counting order with t_1 as the
most significant bit.
"""

import itertools
from typing import List, Optional, Sequence, Tuple

import numpy as np

from torfan.errors import BasisNotPairwiseConical, DisconnectedFan
from torfan.fan import Fan
from torfan.present import Presentation, Relator, drop_trivial_relators, free_reduce
from torfan.racg import Word, graph_from_fan, inverse, reduce
from torfan.util.logging import get_logger

from .basis import BasisSelection, choose_basis
from .char_matrix import CharMatrixGF2, char_matrix, connectedness

logger = get_logger(__name__)

Coset = Tuple[int, ...]


def cosets(n: int) -> List[Coset]:
    return list(itertools.product((0, 1), repeat=n))


def coset_index(t: Sequence[int]) -> int:
    index = 0
    for bit in t:
        index = 2 * index + int(bit)
    return index


def generator_name(position: int, t: Sequence[int]) -> str:
    return f"y_{position + 1}_{''.join(str(int(b)) for b in t)}"


def _shift(t: Sequence[int], row: np.ndarray) -> Coset:
    return tuple(int(b) ^ int(r) for b, r in zip(t, row))


def transversal(matrix: CharMatrixGF2, t: Sequence[int]) -> Word:
    """T(t) in original ray indices."""
    return tuple(matrix.original(i) for i, bit in enumerate(t) if bit)


def _require_connected(fan: Fan) -> None:
    connected, components = connectedness(fan)
    if not connected:
        raise DisconnectedFan(components)


def resolve_matrix(
    fan: Fan,
    selection: Optional[BasisSelection],
    matrix: Optional[CharMatrixGF2],
) -> CharMatrixGF2:
    _require_connected(fan)
    if matrix is not None:
        return matrix
    return char_matrix(fan, selection or choose_basis(fan))


def _cone_pairs(fan: Fan, matrix: CharMatrixGF2) -> List[Tuple[int, int]]:
    """Pairs p < q of basis-first positions whose rays span a 2-cone."""
    return [
        (p, q)
        for p, q in itertools.combinations(range(matrix.ray_count), 2)
        if fan.spans_cone(matrix.original(p), matrix.original(q))
    ]


def rewrite(
    matrix: CharMatrixGF2, t: Sequence[int], positions: Sequence[int]
) -> List[Tuple[int, Coset]]:
    """alpha_t of a positive word given in basis-first positions, as (j, coset) letters."""
    letters = []
    coset = tuple(int(b) for b in t)
    for j in positions:
        letters.append((j, coset))
        coset = _shift(coset, matrix.entries[j])
    return letters


def _full_relators(fan: Fan, matrix: CharMatrixGF2) -> List[List[Tuple[int, Coset]]]:
    n = matrix.dim
    relators = []
    for t in cosets(n):
        relators.append(rewrite(matrix, (0,) * n, [i for i, bit in enumerate(t) if bit]))
    pairs = _cone_pairs(fan, matrix)
    for t in cosets(n):
        for j in range(matrix.ray_count):
            relators.append(rewrite(matrix, t, [j, j]))
        for p, q in pairs:
            relators.append(rewrite(matrix, t, [p, q, p, q]))
    return relators


def _clean(generators: Sequence[str], relators: Sequence[Relator]) -> Presentation:
    presentation = Presentation(generators=tuple(generators), relators=tuple(relators))
    return drop_trivial_relators(free_reduce(presentation))


def rs_presentation(
    fan: Fan,
    selection: Optional[BasisSelection] = None,
    matrix: Optional[CharMatrixGF2] = None,
) -> Presentation:
    """The full presentation: d * 2^n generators y_{j,t}.

    Relators are alpha_0(T(t)) for every t, then for every t the rewritten
    squares s_j^2 and the rewritten (s_p s_q)^2 for every pair spanning a cone.
    """
    matrix = resolve_matrix(fan, selection, matrix)
    n = matrix.dim
    width = 2**n

    generators = [
        generator_name(j, t) for j in range(matrix.ray_count) for t in cosets(n)
    ]
    relators = [
        tuple((j * width + coset_index(c), 1) for j, c in letters)
        for letters in _full_relators(fan, matrix)
    ]
    presentation = _clean(generators, relators)
    logger.debug(
        "full presentation built",
        generators=len(presentation.generators),
        relators=len(presentation.relators),
    )
    return presentation


def simplified_presentation(
    fan: Fan,
    selection: Optional[BasisSelection] = None,
    matrix: Optional[CharMatrixGF2] = None,
) -> Presentation:
    """The presentation on the (d - n) * 2^n generators y_{j,t} with j > n.

    When the basis rays pairwise span cones every y_{p,t} with p <= n is
    trivial. What is left are the identification relators
    y_{j,t} y_{j,t+a_j} and the rewritten (s_p s_q)^2 with basis letters
    deleted.
    """
    matrix = resolve_matrix(fan, selection, matrix)
    if not matrix.selection.basis_is_pairwise_conical:
        raise BasisNotPairwiseConical(matrix.selection.basis_ray_indices)

    n = matrix.dim
    width = 2**n

    def symbol(j: int, c: Coset) -> int:
        return (j - n) * width + coset_index(c)

    generators = [
        generator_name(j, t) for j in range(n, matrix.ray_count) for t in cosets(n)
    ]
    relators: List[Relator] = []
    for j in range(n, matrix.ray_count):
        for t in cosets(n):
            relators.append(
                tuple((symbol(j, c), 1) for _, c in rewrite(matrix, t, [j, j]))
            )
    pairs = _cone_pairs(fan, matrix)
    for t in cosets(n):
        for p, q in pairs:
            relators.append(
                tuple(
                    (symbol(j, c), 1)
                    for j, c in rewrite(matrix, t, [p, q, p, q])
                    if j >= n
                )
            )
    return _clean(generators, relators)


def generator_words(matrix: CharMatrixGF2, which_positions: Sequence[int]) -> List[Word]:
    """T(t) s_j T(t + a_j)^-1 in original ray indices, j outer and t inner."""
    words = []
    for j in which_positions:
        for t in cosets(matrix.dim):
            shifted = _shift(t, matrix.entries[j])
            words.append(
                transversal(matrix, t)
                + (matrix.original(j),)
                + inverse(transversal(matrix, shifted))
            )
    return words


def pi1_generators_in_W(fan: Fan) -> List[Word]:
    """Normal forms of T(t) S_j T(t)^-1 with S_j = s_j s_1^a_j1 ... s_n^a_jn, for j > n."""
    matrix = resolve_matrix(fan, None, None)
    if not matrix.selection.basis_is_pairwise_conical:
        raise BasisNotPairwiseConical(matrix.selection.basis_ray_indices)
    graph = graph_from_fan(fan)
    words = []
    for j in range(matrix.dim, matrix.ray_count):
        s_j = s_word(matrix, j)
        for t in cosets(matrix.dim):
            prefix = transversal(matrix, t)
            words.append(reduce(graph, prefix + s_j + inverse(prefix)))
    return words


def s_word(matrix: CharMatrixGF2, position: int) -> Word:
    """S_j = s_j s_1^a_j1 ... s_n^a_jn in original ray indices; phi_hat(S_j) = 0."""
    row = matrix.entries[position]
    return (matrix.original(position),) + tuple(
        matrix.original(i) for i in range(matrix.dim) if row[i]
    )
