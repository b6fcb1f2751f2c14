import enum


class COMPLETENESS(enum.Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"


class ABELIAN_CASE(enum.Enum):
    # every pair of rays spans a cone
    CASE_I = "case_i"
    # each non-basis ray has one non-conical partner inside the basis block
    CASE_II = "case_ii"
    NON_ABELIAN = "non_abelian"


class ELEMENT_ORDER(enum.Enum):
    ONE = "1"
    TWO = "2"
    INFINITE = "infinite"


class PRESENTATION_KIND(enum.Enum):
    FULL = "full"
    SIMPLIFIED = "simplified"


class EXPORT_FORMAT(enum.Enum):
    PLAIN = "plain"
    MACHINE = "machine"


class EXIT_CODE(enum.IntEnum):
    SUCCESS = 0
    SEMANTIC_FAILURE = 1
    INPUT_FAILURE = 2
