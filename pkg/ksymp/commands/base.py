"""Shared plumbing for the command line subcommands"""

import argparse
import dataclasses
import enum
from abc import ABC, abstractmethod
from typing import Any, Mapping

from ksymp.input_controller import InputController
from ksymp.models.scalar import Backend

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class CommandName(enum.Enum):
    """Enumeration of the subcommands"""

    VERIFY = "verify"
    CONSTRUCT = "construct"
    CLASSIFY = "classify"
    OBSTRUCT = "obstruct"
    EXTRACT = "extract"


@dataclasses.dataclass(frozen=True)
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """Everything that determines the output of one run"""

    command: CommandName
    input: str | None = None
    backend: Backend = Backend.EXACT
    seed: int = 0
    samples: int = 100
    output: str | None = None
    log_level: str | None = None
    options: Mapping[str, Any] = dataclasses.field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Resolve parsed arguments; subcommand specific ones go into options"""
        common = {"command", "input", "backend", "seed", "samples", "output", "log_level"}
        options = {key: value for key, value in vars(args).items() if key not in common}
        return cls(
            command=CommandName(args.command),
            input=args.input,
            backend=Backend(args.backend),
            seed=args.seed,
            samples=args.samples,
            output=args.output,
            log_level=args.log_level,
            options=options,
        )


@dataclasses.dataclass(frozen=True)
class CommandResult:
    """JSON-ready payload and the exit code it maps to"""

    payload: dict[str, Any]
    exit_code: int = EXIT_OK


class Command(ABC):
    """A subcommand: its arguments and how it turns a RunConfig into a result"""

    name: CommandName
    help: str
    reads_input: bool = False

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Register the subcommand's own arguments"""

    @abstractmethod
    def execute(self, config: RunConfig, input_controller: InputController | None) -> CommandResult:
        """Run the subcommand"""
