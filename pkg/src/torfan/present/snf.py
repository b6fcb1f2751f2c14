"""
Smith normal form over the integers.

All arithmetic runs on numpy object arrays so entries are Python ints and never
overflow. The pivot at each stage is the smallest nonzero absolute value in the
remaining block, ties broken by lowest row and then lowest column, so the
transforms are reproducible run to run.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class SmithDecomposition:
    """`left @ matrix @ right == diagonal` with `left`, `right` unimodular."""

    left: np.ndarray
    diagonal: np.ndarray
    right: np.ndarray

    @property
    def divisors(self) -> List[int]:
        size = min(self.diagonal.shape) if self.diagonal.ndim == 2 else 0
        return [int(self.diagonal[k, k]) for k in range(size)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d != 0)


def as_integer_matrix(matrix) -> np.ndarray:
    array = np.array(matrix, dtype=object)
    if array.ndim == 1 and array.size == 0:
        return np.zeros((0, 0), dtype=object)
    if array.ndim != 2:
        raise ValueError("expected a rectangular integer matrix")
    return np.vectorize(int, otypes=[object])(array) if array.size else array


def _find_pivot(block: np.ndarray, start: int) -> Optional[Tuple[int, int]]:
    best = None
    rows, cols = block.shape
    for i in range(start, rows):
        for j in range(start, cols):
            value = abs(block[i, j])
            if value and (best is None or value < best[0]):
                best = (value, i, j)
    return None if best is None else (best[1], best[2])


def smith_decomposition(matrix) -> SmithDecomposition:
    diagonal = as_integer_matrix(matrix).copy()
    rows, cols = diagonal.shape
    left = np.eye(rows, dtype=object)
    right = np.eye(cols, dtype=object)
    if rows:
        left = np.vectorize(int, otypes=[object])(left)
    if cols:
        right = np.vectorize(int, otypes=[object])(right)

    for k in range(min(rows, cols)):
        while True:
            pivot = _find_pivot(diagonal, k)
            if pivot is None:
                return SmithDecomposition(left, diagonal, right)
            i, j = pivot
            if i != k:
                diagonal[[k, i]] = diagonal[[i, k]]
                left[[k, i]] = left[[i, k]]
            if j != k:
                diagonal[:, [k, j]] = diagonal[:, [j, k]]
                right[:, [k, j]] = right[:, [j, k]]

            p = diagonal[k, k]
            for i in range(k + 1, rows):
                q = diagonal[i, k] // p
                if q:
                    diagonal[i] -= q * diagonal[k]
                    left[i] -= q * left[k]
            for j in range(k + 1, cols):
                q = diagonal[k, j] // p
                if q:
                    diagonal[:, j] -= q * diagonal[:, k]
                    right[:, j] -= q * right[:, k]

            if any(diagonal[i, k] for i in range(k + 1, rows)) or any(
                diagonal[k, j] for j in range(k + 1, cols)
            ):
                # a remainder smaller than the pivot survived; pivot again
                continue

            offender = next(
                (
                    i
                    for i in range(k + 1, rows)
                    for j in range(k + 1, cols)
                    if diagonal[i, j] % p
                ),
                None,
            )
            if offender is not None:
                diagonal[k] += diagonal[offender]
                left[k] += left[offender]
                continue
            break

        if diagonal[k, k] < 0:
            diagonal[k] = -diagonal[k]
            left[k] = -left[k]

    return SmithDecomposition(left, diagonal, right)


def smith_normal_form(matrix) -> List[int]:
    """Elementary divisors d1 | d2 | ..., zeros last, length min(rows, cols)."""
    return smith_decomposition(matrix).divisors
