from typing import List

from pydantic import Field

from lib.core.entity.run_config import PipelineEnum
from lib.core.sdk.controller import BaseController, BaseControllerParameters
from lib.core.usecase.run_usecase import RunUseCase
from lib.core.usecase_models.run_usecase_models import RunError, RunRequest, RunResponse
from lib.core.view_model.run_view_model import RunViewModel
from lib.infrastructure.presenter.run_presenter import RunPresenter


class RunControllerParameters(BaseControllerParameters):
    config_path: str = Field(
        title="Configuration",
        description="Path of the JSON run configuration.",
    )
    output_dir: str = Field(
        title="Output directory",
        description="Directory receiving the report and the curves.",
    )
    pipelines: List[PipelineEnum] = Field(
        default=[],
        title="Pipelines",
        description="Pipelines to run instead of those of the configuration.",
    )
    seed: int | None = Field(
        default=None,
        title="Seed",
        description="Seed of the Monte Carlo paths, instead of that of the configuration.",
        ge=0,
        lt=2**64,
    )


class RunController(BaseController[RunControllerParameters, RunRequest, RunResponse, RunError, RunViewModel]):
    def __init__(self, usecase: RunUseCase, presenter: RunPresenter) -> None:
        super().__init__(usecase=usecase, presenter=presenter)

    def create_request(self, parameters: RunControllerParameters | None) -> RunRequest:
        if parameters is None:
            raise ValueError("Invalid request parameters.")
        else:
            return RunRequest(
                config_path=parameters.config_path,
                output_dir=parameters.output_dir,
                pipelines=parameters.pipelines or None,
                seed=parameters.seed,
            )
