#!/usr/bin/env python3
"""
ksymp - k-symplectic structures, Clifford modules and torus obstructions from the command line
"""
import argparse
import logging
import sys

from ksymp import serialization
from ksymp.commands.base import EXIT_USAGE, Command, CommandName, CommandResult, RunConfig
from ksymp.commands.classify import ClassifyCommand
from ksymp.commands.construct import ConstructCommand
from ksymp.commands.extract import ExtractCommand
from ksymp.commands.obstruct import ObstructCommand
from ksymp.commands.verify import VerifyCommand
from ksymp.errors import InputError, KSympError
from ksymp.helpers.dev_utils import get_project_root, is_dev, setup_logging
from ksymp.input_controller import create_input_controller
from ksymp.models.scalar import Backend
from ksymp.output_controller import create_output_controller

logger = logging.getLogger(__name__)

COMMANDS: dict[CommandName, type[Command]] = {
    CommandName.VERIFY: VerifyCommand,
    CommandName.CONSTRUCT: ConstructCommand,
    CommandName.CLASSIFY: ClassifyCommand,
    CommandName.OBSTRUCT: ObstructCommand,
    CommandName.EXTRACT: ExtractCommand,
}


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-b",
        "--backend",
        choices=[backend.value for backend in Backend],
        default=Backend.EXACT.value,
        help="exact rationals or float64 (default: exact)",
    )
    common.add_argument("--seed", type=_non_negative, default=0, help="seed of the PCG64 generator (default: 0)")
    common.add_argument("--samples", type=_non_negative, default=100, help="number of sampled checks (default: 100)")
    common.add_argument("-i", "--input", default=None, help="input document path, or - for stdin")
    common.add_argument("-o", "--output", default=None, help="output path, or - for stdout (default)")
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="logging level (default: INFO to file, WARNING to stderr)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """The top level parser with one subparser per command"""
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="ksymp",
        description="k-symplectic structures, Clifford modules and torus obstructions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
    Examples:
      %(prog)s construct 3 > triple.json
      %(prog)s verify --input triple.json
      %(prog)s classify 4 3
      %(prog)s classify 4 3 --even
      %(prog)s obstruct 24 10
      %(prog)s extract --input model.json

    Exit codes:
      0  success, or a positive verdict
      1  negative verdict
      2  usage or input error
    """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, command in COMMANDS.items():
        subparser = subparsers.add_parser(name.value, parents=[common], help=command.help)
        command.add_arguments(subparser)
    return parser


def run(config: RunConfig) -> CommandResult:
    """Execute a resolved configuration"""
    command = COMMANDS[config.command]()
    if not command.reads_input:
        return command.execute(config, None)
    with create_input_controller(config.input) as input_controller:
        return command.execute(config, input_controller)


def main(argv: list[str] | None = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    config = RunConfig.from_args(args)
    setup_logging(config.log_level)
    if is_dev():
        logger.info("Project root: %s", get_project_root())
    logger.info("Running %s with backend %s, seed %d", config.command.value, config.backend.value, config.seed)
    try:
        result = run(config)
        with create_output_controller(config.output) as output_controller:
            output_controller.write(serialization.dump_document(result.payload))
    except InputError as error:
        logger.info("input error in %s: %s", error.field, error)
        print(f"ksymp: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except KSympError as error:
        logger.info("%s: %s", type(error).__name__, error)
        print(f"ksymp: error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_USAGE
    except BaseException:
        logger.exception("An error occurred")
        raise
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
