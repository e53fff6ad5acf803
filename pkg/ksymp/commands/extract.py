"""extract: q and c from a top-degree polynomial ∫η^{2n} = c·q(η,η)ⁿ"""

import argparse
import logging

from ksymp import hk_obstructions, linalg, serialization
from ksymp.commands.base import EXIT_NEGATIVE, EXIT_OK, Command, CommandName, CommandResult, RunConfig
from ksymp.errors import InputError, NotAPower
from ksymp.input_controller import InputController

logger = logging.getLogger(__name__)


class ExtractCommand(Command):
    """Fujiki extraction followed by the pairing check for the fundamental class"""

    name = CommandName.EXTRACT
    help = "recover the BBF form and Fujiki constant from intersection data"
    reads_input = True

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, config: RunConfig, input_controller: InputController | None) -> CommandResult:
        if input_controller is None:
            raise InputError("--input", "extract needs an intersection model document")
        document = serialization.load_document(input_controller.read())
        model = serialization.decode_model(document, config.backend)
        try:
            q = hk_obstructions.fujiki_extract(model)
        except NotAPower as error:
            logger.info("top polynomial is not a power: %s", error)
            payload = {
                "is_power": False,
                "message": str(error),
                "monomial": list(error.monomial) if error.monomial is not None else None,
                "residual": serialization.encode_scalar(error.residual) if error.residual is not None else None,
            }
            return CommandResult(payload, EXIT_NEGATIVE)
        payload = serialization.encode_quadric(q)
        payload["is_power"] = True
        if q.is_real():
            payload["signature"] = serialization.encode_inertia(linalg.signature(q.gram))
        pairing = hk_obstructions.pairing_check(
            model, hk_obstructions.fundamental_pairing(model), model.n, q, samples=config.samples, seed=config.seed
        )
        payload["pairing"] = serialization.encode_pairing(pairing)
        return CommandResult(payload, EXIT_OK)
