"""obstruct: can an IHS manifold with given b2 and dimension contain a trianalytic torus"""

import argparse

from ksymp import hk_obstructions, serialization
from ksymp.commands.base import EXIT_NEGATIVE, EXIT_OK, Command, CommandName, CommandResult, RunConfig
from ksymp.errors import InputError
from ksymp.input_controller import InputController


class ObstructCommand(Command):
    """Naive and Clifford-refined torus bounds against the manifold dimension

    Exits 1 when the bounds rule a torus out.
    """

    name = CommandName.OBSTRUCT
    help = "torus obstruction verdict for b2 and complex dimension"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("b2", type=int, help="second Betti number")
        parser.add_argument("dim_c", type=int, help="complex dimension of the manifold")
        parser.add_argument(
            "--factor-dim",
            type=int,
            action="append",
            default=[],
            help="also compare b2 with known maximal holonomy factors of this dimension (repeatable)",
        )

    def execute(self, config: RunConfig, input_controller: InputController | None) -> CommandResult:
        b2, dim_c = config.options["b2"], config.options["dim_c"]
        try:
            verdict = hk_obstructions.ogrady_verdict(b2, dim_c)
        except ValueError as error:
            raise InputError("b2" if b2 < 4 else "dim_c", str(error)) from error
        payload = serialization.encode_verdict(verdict)
        factor_dims = config.options["factor_dim"]
        if factor_dims:
            payload["factors"] = {
                str(dim): hk_obstructions.known_factor_verdict(b2, dim) for dim in factor_dims
            }
            payload["factor_narrative"] = hk_obstructions.factor_narrative(b2, factor_dims)
        return CommandResult(payload, EXIT_OK if verdict.torus_possible else EXIT_NEGATIVE)
