from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .snf import smith_normal_form

# (generator index, exponent +1 or -1)
Letter = Tuple[int, int]
Relator = Tuple[Letter, ...]


class Presentation(BaseModel):
    """A finitely presented group: ordered generator symbols and relator words."""

    model_config = ConfigDict(frozen=True)

    generators: Tuple[str, ...]
    relators: Tuple[Relator, ...] = ()

    @field_validator("relators")
    @classmethod
    def _drop_empty(cls, relators):
        return tuple(tuple(relator) for relator in relators if len(relator) > 0)

    @model_validator(mode="after")
    def _check_letters(self):
        count = len(self.generators)
        for relator in self.relators:
            for index, exponent in relator:
                if not 0 <= index < count:
                    raise ValueError(f"relator letter {index} out of range")
                if exponent not in (1, -1):
                    raise ValueError(f"relator exponent {exponent} is not +1/-1")
        return self


class AbelianInvariants(BaseModel):
    model_config = ConfigDict(frozen=True)

    free_rank: int
    torsion_divisors: Tuple[int, ...] = ()

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion_divisors)
        return " + ".join(parts) if parts else "0"


def _free_cancel(relator: Relator) -> Relator:
    stack: List[Letter] = []
    for letter in relator:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    # cyclic cancellation: relators only matter up to conjugation
    start, end = 0, len(stack)
    while end - start >= 2 and stack[start][0] == stack[end - 1][0] and (
        stack[start][1] == -stack[end - 1][1]
    ):
        start += 1
        end -= 1
    return tuple(stack[start:end])


def _inverse(relator: Relator) -> Relator:
    return tuple((index, -exponent) for index, exponent in reversed(relator))


def _cyclic_key(relator: Relator) -> Relator:
    candidates = []
    for word in (relator, _inverse(relator)):
        for shift in range(len(word)):
            candidates.append(word[shift:] + word[:shift])
    return min(candidates)


def free_reduce(presentation: Presentation) -> Presentation:
    """Cancel x x^-1 pairs, cyclically reduce, drop relators that vanish."""
    return Presentation(
        generators=presentation.generators,
        relators=tuple(_free_cancel(r) for r in presentation.relators),
    )


def drop_trivial_relators(presentation: Presentation) -> Presentation:
    """Drop freely trivial relators and repeats up to rotation and inversion."""
    seen = set()
    kept = []
    for relator in presentation.relators:
        reduced = _free_cancel(relator)
        if not reduced:
            continue
        key = _cyclic_key(reduced)
        if key in seen:
            continue
        seen.add(key)
        kept.append(relator)
    return Presentation(generators=presentation.generators, relators=tuple(kept))


def exponent_sum_matrix(presentation: Presentation) -> np.ndarray:
    matrix = np.zeros(
        (len(presentation.relators), len(presentation.generators)), dtype=object
    )
    for row, relator in enumerate(presentation.relators):
        for index, exponent in relator:
            matrix[row, index] += exponent
    return matrix


def abelianize(presentation: Presentation) -> AbelianInvariants:
    generator_count = len(presentation.generators)
    if not presentation.relators or not generator_count:
        return AbelianInvariants(free_rank=generator_count)
    divisors = smith_normal_form(exponent_sum_matrix(presentation))
    nonzero = [d for d in divisors if d != 0]
    return AbelianInvariants(
        free_rank=generator_count - len(nonzero),
        torsion_divisors=tuple(d for d in nonzero if d > 1),
    )
