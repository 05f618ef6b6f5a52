import argparse
from typing import Any

from dependency_injector.wiring import Provide, inject

from lib.core.entity.run_config import PipelineEnum
from lib.core.sdk.cli import CLICommand
from lib.core.view_model.run_view_model import RunViewModel
from lib.infrastructure.config.containers import ApplicationContainer
from lib.infrastructure.controller.run_controller import RunControllerParameters


class RunCLIFeature(CLICommand[RunControllerParameters, RunViewModel]):
    @inject
    def __init__(
        self,
        descriptor: Any = Provide[ApplicationContainer.run_feature.feature_descriptor],
        controller: Any = Provide[ApplicationContainer.run_feature.controller],
        default_output_dir: Any = Provide[ApplicationContainer.config.output.directory],
    ):
        super().__init__(controller=controller, descriptor=descriptor, command="run")
        self._default_output_dir = default_output_dir

    def register_command(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--config", required=True, help="JSON run configuration")
        parser.add_argument(
            "--out", default=self._default_output_dir, help=f"output directory (default: {self._default_output_dir})"
        )
        parser.add_argument(
            "--pipeline",
            action="append",
            choices=[pipeline.value for pipeline in PipelineEnum],
            help="pipeline to run instead of those of the configuration; repeatable",
        )
        parser.add_argument("--seed", type=int, default=None, help="seed of the Monte Carlo paths, in [0, 2^64)")

    def create_parameters(self, args: argparse.Namespace) -> RunControllerParameters:
        return RunControllerParameters(
            config_path=args.config,
            output_dir=args.out,
            pipelines=[PipelineEnum(name) for name in args.pipeline or []],
            seed=args.seed,
        )
