import functools
import itertools
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from torfan.constants import COMPLETENESS
from torfan.present.snf import smith_normal_form

from ._fan import Cone, Fan, RayVector


class SmoothnessVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    smooth: bool
    witness: Optional[Tuple[int, ...]] = None
    divisors: Tuple[int, ...] = ()


def check_smooth(fan: Fan) -> SmoothnessVerdict:
    """A cone is smooth iff its ray matrix has every elementary divisor equal to 1.

    Faces of a smooth cone are smooth, so only maximal cones are checked. The
    first failing cone in stored order is returned with its divisors.
    """
    for cone in fan.max_cones:
        if not cone:
            continue
        divisors = smith_normal_form([list(fan.rays[i]) for i in cone])
        if any(d != 1 for d in divisors):
            return SmoothnessVerdict(
                smooth=False, witness=cone, divisors=tuple(divisors)
            )
    return SmoothnessVerdict(smooth=True)


def _half_plane(ray: RayVector) -> int:
    x, y = ray
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _cross(a: RayVector, b: RayVector) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _by_angle(a: RayVector, b: RayVector) -> int:
    ha, hb = _half_plane(a), _half_plane(b)
    if ha != hb:
        return ha - hb
    return -_cross(a, b)


def _complete_in_plane(fan: Fan) -> bool:
    if fan.ray_count < 3:
        return False
    order = sorted(
        range(fan.ray_count),
        key=functools.cmp_to_key(lambda i, j: _by_angle(fan.rays[i], fan.rays[j])),
    )
    for position, i in enumerate(order):
        j = order[(position + 1) % len(order)]
        if _cross(fan.rays[i], fan.rays[j]) <= 0 or not fan.spans_cone(i, j):
            return False
    return True


def maximal_cone_adjacency(fan: Fan) -> nx.Graph:
    """Maximal cones as nodes, joined when they share a codimension-one face."""
    graph = nx.Graph()
    graph.add_nodes_from(fan.max_cones)
    walls: Dict[Cone, List[Cone]] = {}
    for cone in fan.max_cones:
        for wall in itertools.combinations(cone, len(cone) - 1):
            walls.setdefault(wall, []).append(cone)
    for sharing in walls.values():
        graph.add_edges_from(itertools.combinations(sharing, 2))
    return graph


def _complete_by_walls(fan: Fan) -> bool:
    n = fan.dim
    if any(len(cone) != n for cone in fan.max_cones):
        return False
    incidence: Dict[Cone, int] = {wall: 0 for wall in fan.faces(n - 1)}
    for cone in fan.max_cones:
        for wall in itertools.combinations(cone, n - 1):
            incidence[wall] += 1
    if any(count != 2 for count in incidence.values()):
        return False
    return nx.is_connected(maximal_cone_adjacency(fan))


def check_complete(fan: Fan) -> COMPLETENESS:
    """Whether the cones cover the whole of N_R.

    Exact for dimensions up to 2 (angular sweep). From dimension 3 on, a fan is
    reported complete when every wall lies in exactly two maximal n-cones and
    the maximal cones form one connected gallery.
    """
    if fan.dim == 0:
        complete = True
    elif fan.dim == 1:
        complete = set(fan.rays) == {(1,), (-1,)}
    elif fan.dim == 2:
        complete = _complete_in_plane(fan)
    else:
        complete = _complete_by_walls(fan)
    return COMPLETENESS.COMPLETE if complete else COMPLETENESS.INCOMPLETE
