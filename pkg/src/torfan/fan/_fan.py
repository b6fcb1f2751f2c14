import itertools
import math
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError

from torfan.errors import (
    DependentRaysInCone,
    DuplicateRay,
    IndexOutOfRange,
    MalformedFanDocument,
    NonPrimitiveRay,
    NotIntersectionClosed,
    OrphanRay,
    RayDimensionMismatch,
)
from torfan.util.logging import get_logger

logger = get_logger(__name__)

RayVector = Tuple[int, ...]
# strictly increasing ray indices; () is the zero cone
Cone = Tuple[int, ...]


class FanDocument(BaseModel):
    """Shape of the fan JSON document; ray indices are 0-based."""

    model_config = ConfigDict(extra="forbid")

    # dim 0 only arises internally, as the star of a maximal cone
    dim: StrictInt = Field(ge=1)
    rays: List[List[StrictInt]]
    max_cones: List[List[StrictInt]]


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    return sympy.Matrix([list(v) for v in vectors]).rank()


def _cones_meet_in_face(rays: Sequence[RayVector], first: Cone, second: Cone) -> bool:
    """Whether two simplicial cones intersect exactly in the cone on their shared rays.

    The intersection is larger than the shared face iff some positive combination
    of the rays private to `first` equals a positive combination of the rays
    private to `second` modulo the span of the shared rays. Such a relation
    exists iff one exists with minimal support, so it is enough to test every
    circuit of the projected vectors for a one-signed kernel vector.
    """
    shared = sorted(set(first) & set(second))
    first_only = [i for i in first if i not in shared]
    second_only = [j for j in second if j not in shared]
    if not first_only or not second_only:
        return True
    union = shared + first_only + second_only
    if _rank([rays[i] for i in union]) == len(union):
        return True

    signed = [sympy.Matrix(rays[i]) for i in first_only] + [
        -sympy.Matrix(rays[j]) for j in second_only
    ]
    if shared:
        annihilator = sympy.Matrix([list(rays[c]) for c in shared]).nullspace()
        projection = sympy.Matrix.hstack(*annihilator).T
        signed = [projection * v for v in signed]

    for size in range(2, len(signed) + 1):
        for subset in itertools.combinations(range(len(signed)), size):
            kernel = sympy.Matrix.hstack(*[signed[k] for k in subset]).nullspace()
            if len(kernel) != 1:
                continue
            coefficients = list(kernel[0])
            if all(c > 0 for c in coefficients) or all(c < 0 for c in coefficients):
                return False
    return True


class Fan:
    """A simplicial rational fan given by its rays and maximal cones.

    Ray order is significant: ray j names the Coxeter generator s_j. The face
    closure is derived from the maximal cones and cached on first use.
    """

    def __init__(
        self,
        dim: int,
        rays: Iterable[Sequence[int]],
        max_cones: Iterable[Sequence[int]],
    ):
        self._dim = int(dim)
        self._rays: Tuple[RayVector, ...] = tuple(
            tuple(int(x) for x in ray) for ray in rays
        )
        self._max_cones: Tuple[Cone, ...] = self._validate(
            [list(cone) for cone in max_cones]
        )

    def _validate(self, raw_cones: List[List[int]]) -> Tuple[Cone, ...]:
        seen: Dict[RayVector, int] = {}
        for index, ray in enumerate(self._rays):
            if len(ray) != self._dim:
                raise RayDimensionMismatch(index, len(ray), self._dim)
            # gcd of the zero vector is 0
            if math.gcd(*ray) != 1:
                raise NonPrimitiveRay(index, ray)
            if ray in seen:
                raise DuplicateRay(index, seen[ray])
            seen[ray] = index

        cones: List[Cone] = []
        for raw in raw_cones:
            for index in raw:
                if not 0 <= index < len(self._rays):
                    raise IndexOutOfRange(raw, index)
            cone = tuple(sorted(raw))
            if len(set(cone)) != len(cone) or len(cone) > self._dim:
                raise DependentRaysInCone(cone)
            if _rank([self._rays[i] for i in cone]) != len(cone):
                raise DependentRaysInCone(cone)
            cones.append(cone)

        maximal: List[Cone] = []
        for cone in cones:
            if cone in maximal:
                continue
            if any(set(cone) < set(other) for other in cones):
                continue
            maximal.append(cone)
        if not maximal:
            maximal = [()]

        covered = set(itertools.chain.from_iterable(maximal))
        for index in range(len(self._rays)):
            if index not in covered:
                raise OrphanRay(index)

        for first, second in itertools.combinations(maximal, 2):
            if not _cones_meet_in_face(self._rays, first, second):
                raise NotIntersectionClosed(first, second)
        return tuple(maximal)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def rays(self) -> Tuple[RayVector, ...]:
        return self._rays

    @property
    def max_cones(self) -> Tuple[Cone, ...]:
        return self._max_cones

    @property
    def ray_count(self) -> int:
        return len(self._rays)

    @cached_property
    def closure(self) -> FrozenSet[Cone]:
        faces = set()
        for cone in self._max_cones:
            for size in range(len(cone) + 1):
                faces.update(itertools.combinations(cone, size))
        return frozenset(faces)

    def faces(self, dim: Union[int, None] = None) -> List[Cone]:
        """Faces of the closure ordered by (dimension, ray set)."""
        selected = (c for c in self.closure if dim is None or len(c) == dim)
        return sorted(selected, key=lambda c: (len(c), c))

    def contains(self, cone: Sequence[int]) -> bool:
        return tuple(sorted(cone)) in self.closure

    def spans_cone(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.closure

    def cone_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for cone in self.closure:
            counts[len(cone)] = counts.get(len(cone), 0) + 1
        return dict(sorted(counts.items()))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return (
            self._dim == other._dim
            and self._rays == other._rays
            and set(self._max_cones) == set(other._max_cones)
        )

    def __hash__(self) -> int:
        return hash((self._dim, self._rays, frozenset(self._max_cones)))

    def __repr__(self) -> str:
        return (
            f"Fan(dim={self._dim}, rays={[list(r) for r in self._rays]}, "
            f"max_cones={[list(c) for c in self._max_cones]})"
        )


def parse_fan(document: Union[str, bytes, Mapping[str, Any]]) -> Fan:
    """Build a validated Fan from a JSON text or an already decoded mapping."""
    try:
        if isinstance(document, (str, bytes)):
            parsed = FanDocument.model_validate_json(document)
        else:
            parsed = FanDocument.model_validate(document)
    except ValidationError as e:
        raise MalformedFanDocument(str(e)) from e

    fan = Fan(parsed.dim, parsed.rays, parsed.max_cones)
    logger.debug(
        "fan parsed", dim=fan.dim, rays=fan.ray_count, max_cones=len(fan.max_cones)
    )
    return fan


def to_document(fan: Fan) -> Dict[str, Any]:
    return {
        "dim": fan.dim,
        "rays": [list(ray) for ray in fan.rays],
        "max_cones": [list(cone) for cone in fan.max_cones],
    }


class SimplicialComplex:
    """The simplicial complex of a fan: vertices are rays, faces are nonzero cones."""

    def __init__(self, vertices: Iterable[int], faces: Iterable[Sequence[int]]):
        self.vertices: Tuple[int, ...] = tuple(sorted(vertices))
        self.faces: FrozenSet[Tuple[int, ...]] = frozenset(
            tuple(sorted(f)) for f in faces if len(f) > 0
        )

    @classmethod
    def from_fan(cls, fan: Fan) -> "SimplicialComplex":
        return cls(range(fan.ray_count), fan.closure)

    def is_face(self, simplex: Sequence[int]) -> bool:
        return len(simplex) == 0 or tuple(sorted(simplex)) in self.faces

    def minimal_non_faces(self) -> List[Tuple[int, ...]]:
        """Every minimal non-face has the form F + {v} with F a face and v > max(F)."""
        found = []
        top = max((len(f) for f in self.faces), default=0)
        for size in range(2, top + 2):
            for face in self.faces:
                if len(face) != size - 1:
                    continue
                for vertex in self.vertices:
                    if vertex <= face[-1]:
                        continue
                    candidate = face + (vertex,)
                    if self.is_face(candidate):
                        continue
                    if all(
                        self.is_face(sub)
                        for sub in itertools.combinations(candidate, size - 1)
                    ):
                        found.append(candidate)
        return sorted(found)

    def is_flag(self) -> bool:
        return all(len(p) == 2 for p in self.minimal_non_faces())
