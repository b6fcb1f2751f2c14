"""
Row reduction over GF(2).

Matrices are numpy uint8 arrays holding 0/1 entries. Every function copies its
input; callers keep ownership of what they pass in.
"""

from typing import List, Sequence, Tuple

import numpy as np


def as_gf2(matrix) -> np.ndarray:
    """Reduce an integer array modulo 2 into a uint8 array."""
    return np.mod(np.asarray(matrix, dtype=object), 2).astype(np.uint8)


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and the pivot columns."""
    reduced = np.array(matrix, dtype=np.uint8, copy=True)
    rows, cols = reduced.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(reduced[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            reduced[[row, pivot]] = reduced[[pivot, row]]
        for other in range(rows):
            if other != row and reduced[other, col]:
                reduced[other] ^= reduced[row]
        pivots.append(col)
        row += 1
    return reduced, pivots


def rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    _, pivots = rref(matrix)
    return len(pivots)


def inverse(matrix: np.ndarray) -> np.ndarray:
    """Inverse of a square invertible GF(2) matrix."""
    size = matrix.shape[0]
    augmented = np.concatenate(
        [np.array(matrix, dtype=np.uint8), np.eye(size, dtype=np.uint8)], axis=1
    )
    reduced, pivots = rref(augmented)
    if pivots[:size] != list(range(size)):
        raise ValueError("matrix is singular over GF(2)")
    return reduced[:, size:]


def greedy_independent(rows: np.ndarray, order: Sequence[int]) -> List[int]:
    """Indices (taken in `order`) of a maximal independent set of rows."""
    chosen: List[int] = []
    width = rows.shape[1]
    echelon = np.zeros((0, width), dtype=np.uint8)
    for index in order:
        candidate = np.vstack([echelon, rows[index]])
        if rank(candidate) > len(chosen):
            chosen.append(index)
            echelon = candidate
        if len(chosen) == width:
            break
    return chosen
