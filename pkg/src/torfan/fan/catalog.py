"""
Named fans used as fixtures by the tests and the CLI smoke checks.

Each builder returns a fresh validated Fan. Ray order follows the usual
textbook listing, since it fixes the Coxeter generator names.
"""

import itertools

from ._fan import Fan
from .operations import product, star_subdivide

__all__ = [
    "blowup_chain",
    "circle",
    "connected_skew_pair",
    "hirzebruch",
    "line_pair",
    "orthant",
    "p1_times_p1",
    "product",
    "projective_space",
]


def _basis(n: int, i: int) -> list:
    return [1 if k == i else 0 for k in range(n)]


def circle() -> Fan:
    """The complete fan in Z^1; its real points form a circle."""
    return Fan(1, [[1], [-1]], [[0], [1]])


def line_pair() -> Fan:
    """Rays +e1 and -e1 in Z^2: a disconnected real variety with two components."""
    return Fan(2, [[1, 0], [-1, 0]], [[0], [1]])


def connected_skew_pair() -> Fan:
    """Rays 2e1+3e2 and e1 in Z^2: connected although the rays miss a Z-basis."""
    return Fan(2, [[2, 3], [1, 0]], [[0], [1]])


def projective_space(n: int) -> Fan:
    rays = [_basis(n, i) for i in range(n)] + [[-1] * n]
    return Fan(n, rays, itertools.combinations(range(n + 1), n))


def p1_times_p1() -> Fan:
    return Fan(2, [[1, 0], [0, 1], [-1, 0], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]])


def hirzebruch(a: int) -> Fan:
    """The Hirzebruch surface F_a; F_0 is P^1 x P^1."""
    return Fan(
        2, [[1, 0], [0, 1], [-1, a], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]]
    )


def orthant(n: int) -> Fan:
    """All faces of the positive orthant cone in Z^n."""
    return Fan(n, [_basis(n, i) for i in range(n)], [list(range(n))])


def blowup_chain(base: Fan, count: int) -> Fan:
    """Blow up the first maximal cone `count` times in a row."""
    fan = base
    for _ in range(count):
        fan = star_subdivide(fan, fan.max_cones[0])
    return fan
