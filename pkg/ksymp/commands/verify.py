"""verify: decide whether a span of two-forms is k-symplectic"""

import argparse
import logging

from ksymp import ksymplectic, serialization
from ksymp.commands.base import EXIT_NEGATIVE, EXIT_OK, Command, CommandName, CommandResult, RunConfig
from ksymp.errors import InputError
from ksymp.input_controller import InputController

logger = logging.getLogger(__name__)


class VerifyCommand(Command):
    """Reads a TwoFormSpan document and writes a KSymplecticReport"""

    name = CommandName.VERIFY
    help = "check a span of two-forms against the k-symplectic definition"
    reads_input = True

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, config: RunConfig, input_controller: InputController | None) -> CommandResult:
        if input_controller is None:
            raise InputError("--input", "verify needs a span document")
        document = serialization.load_document(input_controller.read())
        span = serialization.decode_span(document, config.backend)
        logger.info("verifying a %d-form span on dimension %d from %s", span.k, span.dim_v, input_controller.name)
        report = ksymplectic.verify_ksymplectic(span, samples=config.samples, seed=config.seed)
        payload = serialization.encode_report(report)
        payload["k"] = span.k
        payload["dim_v"] = span.dim_v
        return CommandResult(payload, EXIT_OK if report.is_k_symplectic else EXIT_NEGATIVE)
