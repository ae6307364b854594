import argparse

from src.config import settings
from src.core.errors import InputError


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports bad usage as an InputError instead of exiting."""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{value}'")
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {number}")
    return number


def _search_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-degree", type=_positive, help=f"largest cover degree (default {settings.MAX_COVER_DEGREE})")
    parser.add_argument("--cap", type=_positive, help=f"regularization cap (default {settings.REGULARIZATION_CAP})")
    parser.add_argument("--per-diagonal", action="store_true", help="one cover per returning diagonal, then a common cover")
    parser.add_argument("--mode", choices=settings.SEARCH_MODES,
                        help=f"search mode; --mode per-diagonal is the same as --per-diagonal (default {settings.SEARCH_MODE})")
    parser.add_argument("--resume", metavar="TOKEN", help="checkpoint token of an earlier search")
    parser.add_argument("--max-reps", type=_positive, help="stop after examining this many reps")


def _order_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--order", default="default",
                        help="default | reverse | random:SEED | file:PATH | comma separated class ids")


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(prog="virtual-triangulations",
                               description="Geodesic triangulations of finite covers of polyhedral complexes")
    parser.add_argument("--config", metavar="PATH", help="settings file in dotenv syntax")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="logging level")
    parser.add_argument("--json", action="store_true", help="print machine-readable JSON")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    validate = commands.add_parser("validate", help="check a complex file")
    validate.add_argument("complex")

    diagonals = commands.add_parser("diagonals", help="list diagonals and witness words")
    diagonals.add_argument("complex")
    diagonals.add_argument("--no-witnesses", action="store_true", help="skip witness words")

    covers = commands.add_parser("covers", help="permutation representations and cover search")
    cover_commands = covers.add_subparsers(dest="covers_command", required=True, parser_class=CliArgumentParser)
    enumerate_ = cover_commands.add_parser("enumerate", help="transitive reps of one degree up to conjugation")
    enumerate_.add_argument("complex")
    enumerate_.add_argument("--degree", type=_positive, required=True)
    enumerate_.add_argument("--limit", type=_positive, help="stop after this many reps")
    search = cover_commands.add_parser("search", help="find a regular cover without returning diagonals")
    search.add_argument("complex")
    _search_options(search)
    search.add_argument("--output", metavar="PATH", help="write the cover complex here")

    pull = commands.add_parser("pull", help="triangulate a complex without returning diagonals")
    pull.add_argument("complex")
    _order_option(pull)
    pull.add_argument("--output", metavar="PATH", help="write the triangulation here")

    virtualize = commands.add_parser("virtualize", help="cover search, pulling and verification end to end")
    virtualize.add_argument("complex")
    _search_options(virtualize)
    _order_option(virtualize)
    virtualize.add_argument("--output", metavar="PATH", help="write the triangulation here")
    virtualize.add_argument("--report", metavar="PATH", help=f"write the {settings.REPORT_FORMAT} report here")

    verify = commands.add_parser("verify", help="re-verify a triangulation file")
    verify.add_argument("triangulation")
    verify.add_argument("--against", metavar="COMPLEX", required=True, help="the complex it triangulates")
    return parser
