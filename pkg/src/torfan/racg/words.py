"""
Words in a right-angled Coxeter group.

A word is a tuple of generator indices; every generator is an involution, so
inverting a word reverses it. `reduce` returns the canonical normal form:

1. Tits reduction. Letters are appended one at a time to a reduced prefix. A new
   letter s cancels against the last occurrence of s when every letter after
   that occurrence commutes with s; otherwise it is appended.
2. Canonical ordering. Among the letters that can be shuffled to the front,
   the smallest index is emitted first, repeatedly.

Two reduced words name the same element iff they differ by commutations, so
the resulting tuples are equal exactly when the elements are equal.
"""

from typing import List, Sequence, Tuple

import numpy as np

from torfan.constants import ELEMENT_ORDER
from torfan.errors import MalformedWord

from .graph import CommutationGraph

Word = Tuple[int, ...]
NormalForm = Tuple[int, ...]


def check_word(graph: CommutationGraph, word: Sequence[int]) -> Word:
    letters = tuple(word)
    for letter in letters:
        if not isinstance(letter, (int, np.integer)) or isinstance(letter, bool):
            raise MalformedWord(f"letter {letter!r} is not a generator index")
        if not 0 <= letter < graph.generator_count:
            raise MalformedWord(
                f"letter {letter} is outside 0..{graph.generator_count - 1}"
            )
    return tuple(int(letter) for letter in letters)


def parse_word(graph: CommutationGraph, text: str) -> Word:
    """Whitespace separated 0-based generator indices, e.g. "0 3 0 3"."""
    try:
        letters = [int(token) for token in text.split()]
    except ValueError as e:
        raise MalformedWord(f"cannot parse word {text!r}") from e
    return check_word(graph, letters)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(letter) for letter in word)


def _append(graph: CommutationGraph, reduced: List[int], letter: int) -> None:
    position = len(reduced) - 1
    while position >= 0:
        current = reduced[position]
        if current == letter:
            del reduced[position]
            return
        if not graph.commutes(current, letter):
            break
        position -= 1
    reduced.append(letter)


def tits_reduce(graph: CommutationGraph, word: Sequence[int]) -> Word:
    """A reduced word for the element, not yet in canonical order."""
    reduced: List[int] = []
    for letter in check_word(graph, word):
        _append(graph, reduced, letter)
    return tuple(reduced)


def _front_movable(graph: CommutationGraph, word: Sequence[int]) -> List[int]:
    """Positions whose letter commutes with every earlier letter."""
    return [
        p
        for p, letter in enumerate(word)
        if all(graph.commutes(letter, earlier) for earlier in word[:p])
    ]


def _back_movable(graph: CommutationGraph, word: Sequence[int]) -> List[int]:
    return [
        p
        for p, letter in enumerate(word)
        if all(graph.commutes(letter, later) for later in word[p + 1 :])
    ]


def canonicalize(graph: CommutationGraph, reduced: Sequence[int]) -> NormalForm:
    remaining = list(reduced)
    ordered: List[int] = []
    while remaining:
        position = min(_front_movable(graph, remaining), key=lambda p: (remaining[p], p))
        ordered.append(remaining.pop(position))
    return tuple(ordered)


def reduce(graph: CommutationGraph, word: Sequence[int]) -> NormalForm:
    return canonicalize(graph, tits_reduce(graph, word))


def equal(graph: CommutationGraph, first: Sequence[int], second: Sequence[int]) -> bool:
    return reduce(graph, first) == reduce(graph, second)


def inverse(word: Sequence[int]) -> Word:
    return tuple(reversed(tuple(word)))


def multiply(
    graph: CommutationGraph, first: Sequence[int], second: Sequence[int]
) -> NormalForm:
    return reduce(graph, tuple(first) + tuple(second))


def cyclic_reduce(graph: CommutationGraph, word: Sequence[int]) -> Tuple[NormalForm, Word]:
    """Split w as conjugator * core * conjugator^-1 with the core cyclically reduced.

    A letter that can be moved both to the front and, from a different
    position, to the back is peeled off both ends and pushed onto the
    conjugator. The smallest such letter is peeled first.
    """
    core = list(tits_reduce(graph, word))
    conjugator: List[int] = []
    while True:
        fronts = _front_movable(graph, core)
        backs = _back_movable(graph, core)
        candidates = [
            (core[p], p, q)
            for p in fronts
            for q in backs
            if p < q and core[p] == core[q]
        ]
        if not candidates:
            break
        letter, p, q = min(candidates)
        conjugator.append(letter)
        del core[q]
        del core[p]
    return canonicalize(graph, core), tuple(conjugator)


def order(graph: CommutationGraph, word: Sequence[int]) -> ELEMENT_ORDER:
    """Order of the element: torsion only ever has order 2, and only on clique cores."""
    if not tits_reduce(graph, word):
        return ELEMENT_ORDER.ONE
    core, _ = cyclic_reduce(graph, word)
    if graph.is_clique(core):
        return ELEMENT_ORDER.TWO
    return ELEMENT_ORDER.INFINITE


def abelianization_image(graph: CommutationGraph, word: Sequence[int]) -> np.ndarray:
    """Parity of each generator's occurrences: the map W -> Z_2^d."""
    image = np.zeros(graph.generator_count, dtype=np.uint8)
    for letter in check_word(graph, word):
        image[letter] ^= 1
    return image


def in_commutator_subgroup(graph: CommutationGraph, word: Sequence[int]) -> bool:
    return not abelianization_image(graph, word).any()
