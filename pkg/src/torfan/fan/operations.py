import itertools
import math
from typing import Dict, List, Sequence

import numpy as np

from torfan.errors import ConeNotInFan
from torfan.present.snf import smith_decomposition
from torfan.util.logging import get_logger

from ._fan import Cone, Fan, RayVector

logger = get_logger(__name__)


def primitive(vector: Sequence[int]) -> RayVector:
    divisor = math.gcd(*vector)
    if divisor == 0:
        raise ValueError("the zero vector has no primitive direction")
    return tuple(int(x) // divisor for x in vector)


def _require_face(fan: Fan, cone: Sequence[int]) -> Cone:
    face = tuple(sorted(cone))
    if face not in fan.closure:
        raise ConeNotInFan(face)
    return face


def star(fan: Fan, tau: Sequence[int]) -> Fan:
    """The quotient fan Star(tau) in N / N_tau.

    The quotient map is read off the Smith normal form `left @ B @ right = D` of
    the n x k matrix B whose columns are the rays of tau: the last n - k rows of
    `left` kill the saturation of N_tau and map N onto Z^(n-k).
    """
    tau = _require_face(fan, tau)
    n, k = fan.dim, len(tau)

    columns = np.zeros((n, k), dtype=object)
    for column, index in enumerate(tau):
        for row in range(n):
            columns[row, column] = fan.rays[index][row]
    quotient = smith_decomposition(columns).left[k:]

    containing = [cone for cone in fan.max_cones if set(tau) <= set(cone)]
    new_rays: List[RayVector] = []
    position: Dict[int, int] = {}
    for index in sorted(set(itertools.chain.from_iterable(containing)) - set(tau)):
        image = primitive(quotient.dot(np.array(fan.rays[index], dtype=object)))
        if image in new_rays:
            position[index] = new_rays.index(image)
        else:
            position[index] = len(new_rays)
            new_rays.append(image)

    new_cones = [
        sorted({position[i] for i in cone if i not in tau}) for cone in containing
    ]
    logger.debug("star computed", tau=list(tau), rays=len(new_rays))
    return Fan(n - k, new_rays, new_cones)


def barycentric_refine(fan: Fan) -> Fan:
    """Cones over the barycentric subdivision of the fan's simplicial complex.

    One ray per nonzero cone, ordered by (dimension, ray set); the maximal cones
    are the maximal chains sigma_1 < sigma_2 < ... inside each maximal cone.
    """
    faces = fan.faces()[1:]
    rays = [
        primitive([sum(column) for column in zip(*(fan.rays[i] for i in face))])
        for face in faces
    ]
    index_of = {face: k for k, face in enumerate(faces)}

    cones = set()
    for cone in fan.max_cones:
        for ordering in itertools.permutations(cone):
            chain = [tuple(sorted(ordering[: k + 1])) for k in range(len(ordering))]
            cones.add(tuple(sorted(index_of[face] for face in chain)))
    return Fan(fan.dim, rays, sorted(cones))


def star_subdivide(fan: Fan, cone: Sequence[int]) -> Fan:
    """Add the ray through the sum of the cone's rays and split every cone containing it.

    For a smooth cone this is the toric blow-up along the corresponding orbit
    closure. Subdividing a ray or the zero cone returns the fan unchanged.
    """
    tau = _require_face(fan, cone)
    if len(tau) <= 1:
        return fan

    new_index = fan.ray_count
    new_ray = primitive([sum(column) for column in zip(*(fan.rays[i] for i in tau))])
    new_cones: List[List[int]] = []
    for sigma in fan.max_cones:
        if not set(tau) <= set(sigma):
            new_cones.append(list(sigma))
            continue
        for dropped in tau:
            new_cones.append(sorted([i for i in sigma if i != dropped] + [new_index]))
    return Fan(fan.dim, list(fan.rays) + [new_ray], new_cones)


def skeleton(fan: Fan, k: int) -> Fan:
    """The subfan of cones of dimension at most k."""
    cones = [face for face in fan.faces() if len(face) == k]
    cones += [cone for cone in fan.max_cones if len(cone) < k]
    return Fan(fan.dim, fan.rays, cones)


def product(first: Fan, second: Fan) -> Fan:
    """The product fan in N_1 + N_2; rays of `second` follow those of `first`."""
    rays = [ray + (0,) * second.dim for ray in first.rays]
    rays += [(0,) * first.dim + ray for ray in second.rays]
    offset = first.ray_count
    cones = [
        list(a) + [offset + j for j in b]
        for a in first.max_cones
        for b in second.max_cones
    ]
    return Fan(first.dim + second.dim, rays, cones)
