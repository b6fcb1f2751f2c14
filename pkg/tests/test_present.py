"""
Tests for Smith normal form, abelianization and presentation export.
"""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from torfan.constants import EXPORT_FORMAT
from torfan.present import (
    AbelianInvariants,
    Presentation,
    abelianize,
    drop_trivial_relators,
    export_presentation,
    free_reduce,
    parse_machine,
    smith_decomposition,
    smith_normal_form,
)

A, A_INV, B, B_INV = (0, 1), (0, -1), (1, 1), (1, -1)


@pytest.mark.parametrize(
    "matrix, divisors",
    [
        ([[1, 0], [0, 1]], [1, 1]),  # identity
        ([[2]], [2]),
        ([[2, 4], [6, 8]], [2, 4]),  # gcd of entries 2, |det| 8
        ([[0, 2], [3, 0]], [1, 6]),  # coprime diagonal merges
        ([[0, 0, 0], [0, 0, 0]], [0, 0]),  # zero matrix
        ([[1, 2, 3]], [1]),  # single row
        ([[-3]], [3]),  # sign normalized
        ([[1, 0], [1, 2]], [1, 2]),  # non-smooth cone
    ],
)
def test_smith_normal_form(matrix, divisors):
    assert smith_normal_form(matrix) == divisors


def test_smith_decomposition_transforms():
    """left @ m @ right is the diagonal and both transforms are unimodular."""
    m = np.array([[4, 6, 2], [2, 8, 10], [6, 2, 4]], dtype=object)
    decomposition = smith_decomposition(m)
    assert (decomposition.left.dot(m).dot(decomposition.right) == decomposition.diagonal).all()
    assert abs(round(np.linalg.det(decomposition.left.astype(float)))) == 1
    assert abs(round(np.linalg.det(decomposition.right.astype(float)))) == 1
    assert decomposition.divisors == [2, 2, 68]


def _minor_gcd(matrix: np.ndarray, k: int) -> int:
    rows, cols = matrix.shape
    g = 0
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            g = math.gcd(g, int(round(np.linalg.det(matrix[np.ix_(r, c)]))))
    return g


@pytest.mark.slow
def test_smith_normal_form_matches_minor_gcds():
    """Product of the first k divisors equals the gcd of the k x k minors."""
    rng = np.random.default_rng(20240607)
    for _ in range(10_000):
        rows, cols = rng.integers(1, 5, size=2)
        matrix = rng.integers(-9, 10, size=(rows, cols))
        divisors = smith_normal_form(matrix.tolist())

        nonzero = [d for d in divisors if d]
        assert divisors == nonzero + [0] * (len(divisors) - len(nonzero))
        for first, second in zip(nonzero, nonzero[1:]):
            assert second % first == 0

        for k in range(1, len(divisors) + 1):
            assert math.prod(divisors[:k]) == _minor_gcd(matrix.astype(float), k)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-30, 30), min_size=cols, max_size=cols),
            min_size=1,
            max_size=4,
        )
    )
)
def test_smith_normal_form_agrees_with_sympy(rows):
    expected = sympy_smith_normal_form(DM(rows, ZZ)).to_Matrix()
    size = min(len(rows), len(rows[0]))
    theirs = sorted(abs(int(expected[i, i])) for i in range(size))
    ours = smith_normal_form(rows)
    assert sorted(d for d in ours if d) == [d for d in theirs if d]
    assert ours.count(0) == theirs.count(0)


@pytest.mark.parametrize(
    "presentation, invariants",
    [
        (Presentation(generators=("a",), relators=((A, A),)), AbelianInvariants(free_rank=0, torsion_divisors=(2,))),
        (Presentation(generators=("a", "b"), relators=((A, B, A_INV, B_INV),)), AbelianInvariants(free_rank=2)),
        # Klein bottle
        (Presentation(generators=("a", "b"), relators=((A, B, A, B_INV),)), AbelianInvariants(free_rank=1, torsion_divisors=(2,))),
        (Presentation(generators=("a", "b")), AbelianInvariants(free_rank=2)),
        (Presentation(generators=()), AbelianInvariants(free_rank=0)),
    ],
)
def test_abelianize(presentation, invariants):
    assert abelianize(presentation) == invariants


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_abelianize_elementary_abelian(m):
    """Z_2^m presented by squares and commutators."""
    generators = tuple(f"x{i}" for i in range(m))
    relators = [((i, 1), (i, 1)) for i in range(m)]
    relators += [((i, 1), (j, 1), (i, -1), (j, -1)) for i, j in itertools.combinations(range(m), 2)]
    invariants = abelianize(Presentation(generators=generators, relators=tuple(relators)))
    assert invariants == AbelianInvariants(free_rank=0, torsion_divisors=(2,) * m)
    assert invariants.describe() == " + ".join(["Z/2"] * m)


def test_free_reduce_drops_cancelling_relator():
    presentation = Presentation(generators=("a", "b"), relators=((A, A_INV), (A, B, B_INV, A)))
    reduced = free_reduce(presentation)
    assert reduced.relators == ((A, A),)


def test_drop_trivial_relators_collapses_rotations_and_inverses():
    presentation = Presentation(
        generators=("a", "b"),
        relators=((A, B), (B, A), (B_INV, A_INV), (A, A), (A_INV, A)),
    )
    assert drop_trivial_relators(presentation).relators == ((A, B), (A, A))


def test_cleanup_keeps_abelianization():
    presentation = Presentation(
        generators=("a", "b"),
        relators=((A, A, A_INV, A), (B, A), (A, B), (B, B, B, B_INV)),
    )
    cleaned = drop_trivial_relators(free_reduce(presentation))
    assert len(cleaned.relators) < len(presentation.relators)
    assert abelianize(cleaned) == abelianize(presentation)


@pytest.mark.parametrize(
    "presentation, text",
    [
        (Presentation(generators=("a",), relators=((A, A),)), "< a | a*a >"),
        (Presentation(generators=("a", "b"), relators=((A, B_INV),)), "< a, b | a*b^-1 >"),
        (
            Presentation(generators=("y_2_0", "y_2_1"), relators=(((0, 1), (1, 1)),)),
            "< y_2_0, y_2_1 | y_2_0*y_2_1 >",
        ),
    ],
)
def test_export_plain(presentation, text):
    assert export_presentation(presentation) == text


def test_export_machine_round_trip():
    presentation = Presentation(
        generators=("a", "b"), relators=((A, B, A_INV, B_INV), (A, A))
    )
    text = export_presentation(presentation, EXPORT_FORMAT.MACHINE)
    assert text == "a\nb\n\n1 2 -1 -2\n1 1\n"
    assert parse_machine(text) == presentation


def test_presentation_rejects_out_of_range_letter():
    with pytest.raises(ValueError):
        Presentation(generators=("a",), relators=(((1, 1),),))
