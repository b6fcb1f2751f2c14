from .ball import enumerate_ball
from .graph import CommutationGraph, commutator_abelian, graph_from_fan
from .words import (
    NormalForm,
    Word,
    abelianization_image,
    canonicalize,
    check_word,
    cyclic_reduce,
    equal,
    format_word,
    in_commutator_subgroup,
    inverse,
    multiply,
    order,
    parse_word,
    reduce,
    tits_reduce,
)

__all__ = [
    "CommutationGraph",
    "NormalForm",
    "Word",
    "abelianization_image",
    "canonicalize",
    "check_word",
    "commutator_abelian",
    "cyclic_reduce",
    "enumerate_ball",
    "equal",
    "format_word",
    "graph_from_fan",
    "in_commutator_subgroup",
    "inverse",
    "multiply",
    "order",
    "parse_word",
    "reduce",
    "tits_reduce",
]
