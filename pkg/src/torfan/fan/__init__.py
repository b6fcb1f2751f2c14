from ._fan import Cone, Fan, FanDocument, RayVector, SimplicialComplex, parse_fan, to_document
from .checks import SmoothnessVerdict, check_complete, check_smooth, maximal_cone_adjacency
from .combinatorics import (
    PrimitiveCollection,
    is_flag_like,
    primitive_collections,
    simplicial_complex,
)
from .operations import (
    barycentric_refine,
    primitive,
    product,
    skeleton,
    star,
    star_subdivide,
)

__all__ = [
    "Cone",
    "Fan",
    "FanDocument",
    "PrimitiveCollection",
    "RayVector",
    "SimplicialComplex",
    "SmoothnessVerdict",
    "barycentric_refine",
    "check_complete",
    "check_smooth",
    "is_flag_like",
    "maximal_cone_adjacency",
    "parse_fan",
    "primitive",
    "primitive_collections",
    "product",
    "simplicial_complex",
    "skeleton",
    "star",
    "star_subdivide",
    "to_document",
]
