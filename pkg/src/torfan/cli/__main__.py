import argparse
import sys

from torfan.cli import commands
from torfan.config import settings
from torfan.constants import EXIT_CODE, EXPORT_FORMAT, PRESENTATION_KIND
from torfan.errors import FanError, TorfanError, WordError
from torfan.util.logging import configure_logging, get_logger

logger = get_logger(__name__)


def get_parser():
    parser = argparse.ArgumentParser(
        prog="torfan",
        description="Topology of real toric varieties from smooth fans",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    validate = subparsers.add_parser("validate", help="check smoothness and completeness")
    validate.add_argument("path")

    analyze = subparsers.add_parser("analyze", help="run the full analysis")
    analyze.add_argument("path")
    analyze.add_argument("--json", action="store_true", help="canonical JSON output")

    present = subparsers.add_parser("present", help="export a pi_1 presentation")
    present.add_argument("path")
    present.add_argument(
        "--which",
        choices=[kind.value for kind in PRESENTATION_KIND],
        default=PRESENTATION_KIND.FULL.value,
    )
    present.add_argument(
        "--format",
        choices=[fmt.value for fmt in EXPORT_FORMAT],
        default=EXPORT_FORMAT.PLAIN.value,
    )

    refine = subparsers.add_parser("refine", help="write the barycentric refinement")
    refine.add_argument("path")
    refine.add_argument("out_path")

    word = subparsers.add_parser("word", help="word problem in W")
    word.add_argument("path")
    word.add_argument("operation", choices=commands.WORD_OPERATIONS)
    word.add_argument("word", help='0-based generator indices, e.g. "0 2 0 2"')

    return parser


def run(options) -> EXIT_CODE:
    if options.command == "validate":
        return commands.cmd_validate(options.path)
    if options.command == "analyze":
        return commands.cmd_analyze(options.path, as_json=options.json)
    if options.command == "present":
        return commands.cmd_present(
            options.path,
            which=PRESENTATION_KIND(options.which),
            format=EXPORT_FORMAT(options.format),
        )
    if options.command == "refine":
        return commands.cmd_refine(options.path, options.out_path)
    return commands.cmd_word(options.path, options.operation, options.word)


def main(argv=None) -> int:
    options = get_parser().parse_args(argv)
    settings.refresh_from_environment()
    configure_logging(humanize=settings.HUMANIZE_LOGS, level=settings.LOG_LEVEL)

    try:
        return int(run(options))
    except (FanError, WordError, OSError) as e:
        logger.debug("input rejected", command=options.command, error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return int(EXIT_CODE.INPUT_FAILURE)
    except TorfanError as e:
        logger.debug("analysis refused", command=options.command, error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return int(EXIT_CODE.SEMANTIC_FAILURE)


if __name__ == "__main__":
    sys.exit(main())
