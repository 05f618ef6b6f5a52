import argparse
from typing import Any

from dependency_injector.wiring import Provide, inject

from lib.core.sdk.cli import CLICommand
from lib.core.view_model.validate_law_view_model import ValidateLawViewModel
from lib.infrastructure.config.containers import ApplicationContainer
from lib.infrastructure.controller.validate_law_controller import ValidateLawControllerParameters


class ValidateLawCLIFeature(CLICommand[ValidateLawControllerParameters, ValidateLawViewModel]):
    @inject
    def __init__(
        self,
        descriptor: Any = Provide[ApplicationContainer.validate_law_feature.feature_descriptor],
        controller: Any = Provide[ApplicationContainer.validate_law_feature.controller],
    ):
        super().__init__(controller=controller, descriptor=descriptor, command="validate")

    def register_command(self, parser: argparse.ArgumentParser) -> None:
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--config", help="JSON run configuration whose law is validated")
        source.add_argument("--rates", type=float, nargs="+", help="rates b_0 b_1 ... b_J_max")

    def create_parameters(self, args: argparse.Namespace) -> ValidateLawControllerParameters:
        return ValidateLawControllerParameters(rates=args.rates, config_path=args.config)
