from typing import List, Tuple

from ._fan import Fan, SimplicialComplex

# sorted ray indices, size >= 2
PrimitiveCollection = Tuple[int, ...]


def simplicial_complex(fan: Fan) -> SimplicialComplex:
    return SimplicialComplex.from_fan(fan)


def primitive_collections(fan: Fan) -> List[PrimitiveCollection]:
    """Minimal sets of rays that do not span a cone, sorted lexicographically."""
    return simplicial_complex(fan).minimal_non_faces()


def is_flag_like(fan: Fan) -> bool:
    return simplicial_complex(fan).is_flag()
