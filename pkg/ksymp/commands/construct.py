"""construct: a k-symplectic span from copies of a negative definite Clifford module"""

import argparse
import logging

from ksymp import clifford_repr, serialization
from ksymp.commands.base import EXIT_OK, Command, CommandName, CommandResult, RunConfig
from ksymp.errors import InputError
from ksymp.input_controller import InputController
from ksymp.models.clifford import Signature

logger = logging.getLogger(__name__)


class ConstructCommand(Command):
    """gamma_representation, then the averaged metric, then the embedded forms"""

    name = CommandName.CONSTRUCT
    help = "build the k-symplectic span of m copies of a Cl(r,0)-module"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("r", type=int, help="number of generators squaring to -1")
        parser.add_argument("s", type=int, nargs="?", default=0, help="generators squaring to +1 (must be 0)")
        parser.add_argument("-m", "--copies", type=int, default=1, help="copies of the minimal module")

    def execute(self, config: RunConfig, input_controller: InputController | None) -> CommandResult:
        r, s, copies = config.options["r"], config.options["s"], config.options["copies"]
        if s != 0:
            raise InputError("s", "the construction needs a negative definite signature (r, 0)")
        if r < 1:
            raise InputError("r", f"need at least one generator, got {r}")
        if copies < 1:
            raise InputError("copies", f"must be positive, got {copies}")
        signature = Signature(r, 0)
        padded = clifford_repr.padded_copies(signature, copies)
        module = clifford_repr.gamma_representation(signature, padded, config.backend)
        metric = clifford_repr.invariant_metric(module)
        span = clifford_repr.embed_forms(module, metric)
        if padded != copies:
            span = span.with_note(f"padded from {copies} to {padded} copies so that dim V is a multiple of 4")
        logger.info("constructed a %d-symplectic span on dimension %d", span.k, span.dim_v)
        return CommandResult(serialization.encode_span(span), EXIT_OK)
