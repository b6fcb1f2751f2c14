import itertools
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from torfan.errors import EdgesDoNotSpanMod2
from torfan.fan import Fan
from torfan.util import gf2
from torfan.util.logging import get_logger

logger = get_logger(__name__)


class BasisSelection(BaseModel):
    """Rays whose mod-2 images form a basis of N/2N, and the basis-first reindexing.

    `permutation[k]` is the original index of the ray at position k; the basis
    occupies positions 0..n-1 in ascending original order.
    """

    model_config = ConfigDict(frozen=True)

    basis_ray_indices: Tuple[int, ...]
    permutation: Tuple[int, ...]
    basis_is_pairwise_conical: bool

    def position(self, ray_index: int) -> int:
        return self.permutation.index(ray_index)


def mod2_rays(fan: Fan) -> np.ndarray:
    """The d x n matrix of ray images in N/2N."""
    if not fan.ray_count:
        return np.zeros((0, fan.dim), dtype=np.uint8)
    return gf2.as_gf2([list(ray) for ray in fan.rays])


def choose_basis(fan: Fan) -> BasisSelection:
    """Prefer the rays of the first maximal n-cone that stay independent mod 2.

    Such rays pairwise span cones. Failing that, rays are taken greedily in
    index order and pairwise conicality is computed.
    """
    n = fan.dim
    rows = mod2_rays(fan)
    rank = gf2.rank(rows)
    if rank < n:
        raise EdgesDoNotSpanMod2(rank, n)

    basis = None
    for cone in sorted(c for c in fan.max_cones if len(c) == n):
        if gf2.rank(rows[list(cone)]) == n:
            basis = tuple(cone)
            break
    if basis is None:
        basis = tuple(sorted(gf2.greedy_independent(rows, range(fan.ray_count))))
        logger.info("no maximal cone gives a mod 2 basis", basis=list(basis))

    rest = tuple(i for i in range(fan.ray_count) if i not in basis)
    conical = all(fan.spans_cone(p, q) for p, q in itertools.combinations(basis, 2))
    return BasisSelection(
        basis_ray_indices=basis,
        permutation=basis + rest,
        basis_is_pairwise_conical=conical,
    )
