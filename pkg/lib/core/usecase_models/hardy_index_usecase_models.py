from pydantic import Field

from lib.core.entity.models import BranchingLaw, HardyResult
from lib.core.sdk.usecase_models import BaseErrorResponse, BaseRequest, BaseResponse


class HardyIndexRequest(BaseRequest):
    """
    Request Model for the Hardy Index Use Case. Unset tolerances fall back to the configured defaults.

    @param law: A validated subcritical law.
    @param rel_tol: Relative tolerance of the quadrature.
    @param curve_points: Number of uniform samples of the phi curve.
    """

    law: BranchingLaw = Field(description="A validated subcritical law.")
    rel_tol: float | None = Field(default=None, description="Relative tolerance of the quadrature.")
    curve_points: int | None = Field(default=None, description="Number of uniform samples of the phi curve.")


class HardyIndexResponse(BaseResponse):
    hardy: HardyResult = Field(description="The Hardy index with its maximiser and the phi curve.")


class HardyIndexError(BaseErrorResponse):
    pass
