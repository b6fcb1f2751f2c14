import itertools
from typing import List, Sequence, Tuple

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict

from torfan.errors import NoIntegralBasisAmongRays
from torfan.fan import Fan
from torfan.util.logging import get_logger

logger = get_logger(__name__)


class QuotientData(BaseModel):
    """Lattice maps of the exact sequence 0 -> N'' -f-> Z^d -g-> N -> 0.

    `g_matrix` is n x d with column j the ray v_j. `f_matrix` is d x (d - n) with
    one column e'_j - sum_i <u_i, v_j> e'_{b_i} per non-basis ray j, where u_i is
    the dual basis of the chosen lattice basis b.
    """

    model_config = ConfigDict(frozen=True)

    basis_ray_indices: Tuple[int, ...]
    g_matrix: Tuple[Tuple[int, ...], ...]
    f_matrix: Tuple[Tuple[int, ...], ...]


def _unimodular(fan: Fan, indices: Sequence[int]) -> bool:
    return abs(sympy.Matrix([list(fan.rays[i]) for i in indices]).det()) == 1


def integral_basis(fan: Fan) -> Tuple[int, ...]:
    """Rays forming a Z-basis of N: the first maximal n-cone with |det| = 1, else any n rays."""
    n = fan.dim
    if n == 0:
        return ()
    for cone in sorted(c for c in fan.max_cones if len(c) == n):
        if _unimodular(fan, cone):
            return tuple(cone)
    for subset in itertools.combinations(range(fan.ray_count), n):
        if _unimodular(fan, subset):
            return subset
    raise NoIntegralBasisAmongRays()


def quotient_data(fan: Fan) -> QuotientData:
    basis = integral_basis(fan)
    n, d = fan.dim, fan.ray_count
    rest = [j for j in range(d) if j not in basis]

    g = np.array([list(ray) for ray in fan.rays], dtype=object).reshape(d, n).T
    f = np.zeros((d, len(rest)), dtype=object)
    if n:
        # row j of rays @ inverse(basis rows) holds <u_i, v_j>
        dual = sympy.Matrix([list(fan.rays[i]) for i in basis]).inv()
        for column, j in enumerate(rest):
            pairing = sympy.Matrix([list(fan.rays[j])]) * dual
            f[j, column] = 1
            for i, b in enumerate(basis):
                f[b, column] -= int(pairing[i])
    else:
        for column, j in enumerate(rest):
            f[j, column] = 1

    product: List[List[int]] = g.dot(f).tolist() if d else []
    assert all(entry == 0 for row in product for entry in row), "g * f must vanish"
    logger.debug("quotient data computed", basis=list(basis), codim=len(rest))
    return QuotientData(
        basis_ray_indices=basis,
        g_matrix=tuple(tuple(int(x) for x in row) for row in g.tolist()),
        f_matrix=tuple(tuple(int(x) for x in row) for row in f.tolist()),
    )
