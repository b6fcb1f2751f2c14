import json
import sys
from pathlib import Path
from typing import Optional, TextIO

from torfan.constants import COMPLETENESS, EXIT_CODE, EXPORT_FORMAT, PRESENTATION_KIND
from torfan.errors import MalformedFanDocument
from torfan.fan import (
    Fan,
    barycentric_refine,
    check_complete,
    check_smooth,
    is_flag_like,
    parse_fan,
    to_document,
)
from torfan.pi1 import char_matrix, in_pi1, rs_presentation, simplified_presentation, verify_presentation
from torfan.present import export_presentation
from torfan.racg import format_word, graph_from_fan, in_commutator_subgroup, order, parse_word, reduce
from torfan.util.logging import get_logger

from .report import build_report, render_text

logger = get_logger(__name__)

WORD_OPERATIONS = ("reduce", "order", "in-pi1", "in-commutator")


def load_fan(path: str) -> Fan:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise MalformedFanDocument(f"{path} is not UTF-8 text") from e
    return parse_fan(text)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_validate(path: str, out: Optional[TextIO] = None) -> EXIT_CODE:
    out = out or sys.stdout
    fan = load_fan(path)
    verdict = check_smooth(fan)
    complete = check_complete(fan) is COMPLETENESS.COMPLETE
    out.write(f"smooth: {_bool(verdict.smooth)}\n")
    if not verdict.smooth:
        out.write(
            f"witness: cone {list(verdict.witness)} "
            f"has elementary divisors {list(verdict.divisors)}\n"
        )
    out.write(f"complete: {_bool(complete)}\n")
    return EXIT_CODE.SUCCESS if verdict.smooth else EXIT_CODE.SEMANTIC_FAILURE


def cmd_analyze(path: str, as_json: bool = False, out: Optional[TextIO] = None) -> EXIT_CODE:
    out = out or sys.stdout
    report, exit_code = build_report(load_fan(path))
    out.write((report.to_json() if as_json else render_text(report)) + "\n")
    return exit_code


def cmd_present(
    path: str,
    which: PRESENTATION_KIND = PRESENTATION_KIND.FULL,
    format: EXPORT_FORMAT = EXPORT_FORMAT.PLAIN,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> EXIT_CODE:
    out = out or sys.stdout
    err = err or sys.stderr
    fan = load_fan(path)
    check = verify_presentation(fan, which)
    if not check.passed:
        logger.error("presentation failed verification", report=check.model_dump(mode="json"))
        err.write(
            "refusing to export: "
            + (
                f"relator {check.failing_relator} is not trivial in W"
                if check.failing_relator
                else f"generator {check.failing_generator} is not in pi_1"
            )
            + "\n"
        )
        return EXIT_CODE.SEMANTIC_FAILURE

    if which is PRESENTATION_KIND.FULL:
        presentation = rs_presentation(fan)
    else:
        presentation = simplified_presentation(fan)
    text = export_presentation(presentation, format)
    out.write(text if text.endswith("\n") else text + "\n")
    return EXIT_CODE.SUCCESS


def cmd_refine(path: str, out_path: str, out: Optional[TextIO] = None) -> EXIT_CODE:
    out = out or sys.stdout
    fan = load_fan(path)
    refined = barycentric_refine(fan)
    Path(out_path).write_text(json.dumps(to_document(refined), sort_keys=True) + "\n")
    out.write(f"flag_like before: {_bool(is_flag_like(fan))}\n")
    out.write(f"flag_like after: {_bool(is_flag_like(refined))}\n")
    return EXIT_CODE.SUCCESS


def cmd_word(path: str, operation: str, text: str, out: Optional[TextIO] = None) -> EXIT_CODE:
    out = out or sys.stdout
    fan = load_fan(path)
    graph = graph_from_fan(fan)
    word = parse_word(graph, text)
    if operation == "reduce":
        result = format_word(reduce(graph, word))
    elif operation == "order":
        result = order(graph, word).value
    elif operation == "in-pi1":
        result = _bool(in_pi1(char_matrix(fan), word))
    elif operation == "in-commutator":
        result = _bool(in_commutator_subgroup(graph, word))
    else:
        raise ValueError(f"unknown word operation {operation!r}")
    out.write(result + "\n")
    return EXIT_CODE.SUCCESS
