from torfan.constants import EXPORT_FORMAT

from ._presentation import Presentation, Relator


def format_relator(presentation: Presentation, relator: Relator) -> str:
    return "*".join(
        presentation.generators[index] + ("" if exponent == 1 else "^-1")
        for index, exponent in relator
    )


def export_presentation(
    presentation: Presentation, format: EXPORT_FORMAT = EXPORT_FORMAT.PLAIN
) -> str:
    """Render a presentation.

    plain:   `< a, b | a*b*a^-1*b^-1 >`
    machine: one generator symbol per line, a blank line, then one relator per
             line as space separated signed 1-based generator indices.
    """
    if format is EXPORT_FORMAT.PLAIN:
        tokens = [
            "<",
            ", ".join(presentation.generators),
            "|",
            ", ".join(format_relator(presentation, r) for r in presentation.relators),
            ">",
        ]
        return " ".join(token for token in tokens if token)

    lines = list(presentation.generators)
    lines.append("")
    for relator in presentation.relators:
        lines.append(" ".join(str(exponent * (index + 1)) for index, exponent in relator))
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> Presentation:
    """Inverse of the `machine` export."""
    generator_block, _, relator_block = text.partition("\n\n")
    generators = tuple(line for line in generator_block.splitlines() if line)
    relators = []
    for line in relator_block.splitlines():
        if not line.strip():
            continue
        letters = []
        for token in line.split():
            value = int(token)
            if value == 0:
                raise ValueError("generator index 0 is not allowed in machine format")
            letters.append((abs(value) - 1, 1 if value > 0 else -1))
        relators.append(tuple(letters))
    return Presentation(generators=generators, relators=tuple(relators))
