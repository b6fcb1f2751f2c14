from typing import Optional, Sequence


class TorfanError(Exception):
    pass


# Fan construction and validation


class FanError(TorfanError):
    pass


class MalformedFanDocument(FanError):
    pass


class RayDimensionMismatch(FanError):
    def __init__(self, ray_index: int, length: int, dim: int):
        self.ray_index = ray_index
        super().__init__(f"ray {ray_index} has {length} coordinates, expected {dim}")


class NonPrimitiveRay(FanError):
    def __init__(self, ray_index: int, coords: Sequence[int]):
        self.ray_index = ray_index
        self.coords = tuple(coords)
        super().__init__(f"ray {ray_index} {list(coords)} is not primitive")


class DuplicateRay(FanError):
    def __init__(self, ray_index: int, first_index: int):
        self.ray_index = ray_index
        self.first_index = first_index
        super().__init__(f"ray {ray_index} repeats ray {first_index}")


class IndexOutOfRange(FanError):
    def __init__(self, cone: Sequence[int], ray_index: int):
        self.cone = tuple(cone)
        self.ray_index = ray_index
        super().__init__(f"cone {list(cone)} references missing ray {ray_index}")


class DependentRaysInCone(FanError):
    def __init__(self, cone: Sequence[int]):
        self.cone = tuple(cone)
        super().__init__(f"cone {list(cone)} has linearly dependent rays")


class OrphanRay(FanError):
    def __init__(self, ray_index: int):
        self.ray_index = ray_index
        super().__init__(f"ray {ray_index} lies in no cone")


class NotIntersectionClosed(FanError):
    def __init__(self, first: Sequence[int], second: Sequence[int]):
        self.cones = (tuple(first), tuple(second))
        super().__init__(
            f"cones {list(first)} and {list(second)} do not meet in a common face"
        )


class ConeNotInFan(FanError):
    def __init__(self, cone: Sequence[int]):
        self.cone = tuple(cone)
        super().__init__(f"cone {list(cone)} is not a face of the fan")


# Word engine


class WordError(TorfanError):
    pass


class MalformedWord(WordError):
    pass


class RadiusCapExceeded(WordError):
    def __init__(self, radius: int, cap: int):
        self.radius = radius
        self.cap = cap
        super().__init__(f"ball radius {radius} exceeds the configured cap {cap}")


# Fundamental group


class Pi1Error(TorfanError):
    pass


class EdgesDoNotSpanMod2(Pi1Error):
    def __init__(self, rank: int, dim: int):
        self.rank = rank
        self.dim = dim
        self.component_count = 2 ** (dim - rank)
        super().__init__(
            f"ray images span a rank {rank} subspace of GF(2)^{dim}; "
            f"the variety has {self.component_count} components"
        )


class DisconnectedFan(Pi1Error):
    def __init__(self, component_count: int):
        self.component_count = component_count
        super().__init__(
            f"presentation refused: the variety has {component_count} components"
        )


class BasisNotPairwiseConical(Pi1Error):
    def __init__(self, basis: Sequence[int], pair: Optional[Sequence[int]] = None):
        self.basis = tuple(basis)
        self.pair = tuple(pair) if pair is not None else None
        super().__init__(
            f"basis rays {list(basis)} do not pairwise span cones"
            + (f" (pair {list(pair)})" if pair is not None else "")
        )


class NotAbelian(Pi1Error):
    def __init__(self, step: Optional[int], detail: str):
        self.step = step
        super().__init__(f"fundamental group is not abelian: {detail}")


class NotInPi1(Pi1Error):
    def __init__(self, word: Sequence[int]):
        self.word = tuple(word)
        super().__init__(f"word {list(word)} is not in the kernel of phi_hat")


# Arrangements


class TopologyError(TorfanError):
    pass


class NotSmoothFan(TopologyError):
    def __init__(self, cone: Sequence[int]):
        self.cone = tuple(cone)
        super().__init__(f"fan is not smooth at cone {list(cone)}")


class IncompleteFanWithoutBasis(TopologyError):
    def __init__(self):
        super().__init__(
            "fan is incomplete and its rays do not contain a basis of N/2N"
        )


class NoIntegralBasisAmongRays(TopologyError):
    def __init__(self):
        super().__init__("no n rays of the fan form a basis of the lattice")
