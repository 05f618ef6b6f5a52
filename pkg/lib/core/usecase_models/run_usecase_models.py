from typing import Dict, List

from pydantic import Field

from lib.core.entity.models import ConsistencyCheck
from lib.core.entity.run_config import PipelineEnum
from lib.core.sdk.usecase_models import BaseErrorResponse, BaseRequest, BaseResponse


class RunRequest(BaseRequest):
    """
    Request Model for the Run Use Case.

    @param config_path: The path of the JSON run configuration.
    @param output_dir: The directory receiving the report and the curves.
    @param pipelines: Pipelines overriding those of the configuration.
    @param seed: Seed overriding that of the configuration.
    """

    config_path: str = Field(description="The path of the JSON run configuration.")
    output_dir: str = Field(description="The directory receiving the report and the curves.")
    pipelines: List[PipelineEnum] | None = Field(default=None, description="Pipelines overriding the configuration.")
    seed: int | None = Field(default=None, description="Seed overriding the configuration.")


class RunResponse(BaseResponse):
    """
    Response Model for the Run Use Case.

    @param report_path: The path of the written report.
    @param exit_code: 0 if every consistency check passed, 1 otherwise.
    @param pipelines: The pipelines that ran, in execution order.
    @param consistency: The consistency checks.
    @param outputs: The written files by kind.
    """

    report_path: str
    exit_code: int
    pipelines: List[str]
    consistency: List[ConsistencyCheck]
    outputs: Dict[str, str] = {}


class RunError(BaseErrorResponse):
    """
    Error Response Model for the Run Use Case.

    @param pipeline: The pipeline that failed, if the failure is attributed to one.
    @param report_path: The path of the report, if it could still be written.
    """

    pipeline: str | None = None
    report_path: str | None = None
