import numpy as np
import pytest

from torfan.util import gf2


@pytest.mark.parametrize(
    "matrix, rank",
    [
        ([[1, 0], [0, 1]], 2),
        ([[1, 1], [1, 1]], 1),
        ([[2, 4], [6, 8]], 0),  # vanishes mod 2
        ([[1, 0], [0, 1], [-1, -1]], 2),
        ([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 2),  # rows sum to zero
    ],
)
def test_rank(matrix, rank):
    assert gf2.rank(gf2.as_gf2(matrix)) == rank


def test_rank_of_empty_matrix():
    assert gf2.rank(np.zeros((0, 3), dtype=np.uint8)) == 0


def test_inverse():
    matrix = gf2.as_gf2([[1, 1, 0], [0, 1, 0], [1, 1, 1]])
    inverse = gf2.inverse(matrix)
    product = np.mod(matrix.astype(np.int64) @ inverse.astype(np.int64), 2)
    assert (product == np.eye(3, dtype=np.int64)).all()


def test_inverse_rejects_singular():
    with pytest.raises(ValueError):
        gf2.inverse(gf2.as_gf2([[1, 1], [1, 1]]))


def test_greedy_independent_respects_order():
    rows = gf2.as_gf2([[1, 1], [1, 0], [0, 1]])
    assert gf2.greedy_independent(rows, [0, 1, 2]) == [0, 1]
    assert gf2.greedy_independent(rows, [2, 1, 0]) == [2, 1]


def test_as_gf2_handles_negative_entries():
    assert gf2.as_gf2([[-1, -2, 3]]).tolist() == [[1, 0, 1]]
