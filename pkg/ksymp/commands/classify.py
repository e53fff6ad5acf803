"""classify: Cl(r,s) or its even part as a sum of matrix algebras"""

import argparse

from ksymp import clifford_core, clifford_repr, serialization
from ksymp.commands.base import EXIT_OK, Command, CommandName, CommandResult, RunConfig
from ksymp.errors import InputError
from ksymp.input_controller import InputController
from ksymp.models.clifford import Signature
from ksymp.models.scalar import Scalars


class ClassifyCommand(Command):
    """Looks a signature up in the periodic table"""

    name = CommandName.CLASSIFY
    help = "classify Cl(r,s) (or Cl0(r,s)) over R or C"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("r", type=int, help="number of generators squaring to -1")
        parser.add_argument("s", type=int, help="number of generators squaring to +1")
        parser.add_argument("--even", action="store_true", help="classify the even subalgebra")
        parser.add_argument("--complex", action="store_true", help="complexify first")

    def execute(self, config: RunConfig, input_controller: InputController | None) -> CommandResult:
        r, s = config.options["r"], config.options["s"]
        if r < 0 or s < 0 or r + s < 1:
            raise InputError("signature", f"({r}, {s}) needs non-negative entries and at least one generator")
        signature = Signature(r, s)
        even_only = config.options["even"]
        scalars = Scalars.COMPLEX if config.options["complex"] else Scalars.REAL
        description = clifford_core.classify(signature, even_only, scalars)
        payload = serialization.encode_algebra(description)
        payload["signature"] = serialization.encode_signature(signature)
        payload["even_only"] = even_only
        if not even_only:
            payload["even_signature"] = serialization.encode_signature(clifford_core.even_signature(signature))
        if scalars is Scalars.REAL and not even_only:
            payload["constructed_module_dim"] = clifford_repr.minimal_real_dimension(signature)
        return CommandResult(payload, EXIT_OK)
