from typing import Optional, Sequence, Tuple

import numpy as np

from torfan.errors import MalformedWord
from torfan.fan import Fan
from torfan.util import gf2

from .basis import BasisSelection, choose_basis, mod2_rays


class CharMatrixGF2:
    """The characteristic matrix a[j][i] = <u_i, v_j> mod 2.

    Rows are stored in basis-first order, so rows 0..n-1 form the identity.
    Words and `phi_hat` use original ray indices; `row` translates.
    """

    def __init__(self, entries: np.ndarray, selection: BasisSelection):
        self.entries = np.array(entries, dtype=np.uint8)
        self.selection = selection
        self._position = {ray: k for k, ray in enumerate(selection.permutation)}

    @property
    def ray_count(self) -> int:
        return self.entries.shape[0]

    @property
    def dim(self) -> int:
        return self.entries.shape[1]

    def position(self, ray_index: int) -> int:
        return self._position[ray_index]

    def original(self, position: int) -> int:
        return self.selection.permutation[position]

    def row(self, ray_index: int) -> np.ndarray:
        return self.entries[self._position[ray_index]]

    def with_flipped_entry(self, position: int, column: int) -> "CharMatrixGF2":
        """A corrupted copy, for exercising the presentation checks."""
        entries = self.entries.copy()
        entries[position, column] ^= 1
        return CharMatrixGF2(entries, self.selection)

    def as_lists(self):
        return self.entries.tolist()


def char_matrix(fan: Fan, selection: Optional[BasisSelection] = None) -> CharMatrixGF2:
    """Express every ray's mod-2 image in the selected basis."""
    selection = selection or choose_basis(fan)
    rows = mod2_rays(fan)
    basis_rows = rows[list(selection.basis_ray_indices)]
    permuted = rows[list(selection.permutation)]
    if fan.dim == 0:
        return CharMatrixGF2(permuted, selection)
    entries = permuted.astype(np.int64) @ gf2.inverse(basis_rows).astype(np.int64)
    return CharMatrixGF2(np.mod(entries, 2), selection)


def phi_hat(matrix: CharMatrixGF2, word: Sequence[int]) -> np.ndarray:
    """Image of a word under W -> Z_2^n, s_j -> row a[j]."""
    image = np.zeros(matrix.dim, dtype=np.uint8)
    for letter in word:
        if not 0 <= letter < matrix.ray_count:
            raise MalformedWord(f"letter {letter} is outside 0..{matrix.ray_count - 1}")
        image ^= matrix.row(letter)
    return image


def in_pi1(matrix: CharMatrixGF2, word: Sequence[int]) -> bool:
    return not phi_hat(matrix, word).any()


def connectedness(fan: Fan) -> Tuple[bool, int]:
    """(connected, number of components); the count is 2^(n - rank of rays mod 2)."""
    rank = gf2.rank(mod2_rays(fan))
    return rank == fan.dim, 2 ** (fan.dim - rank)
