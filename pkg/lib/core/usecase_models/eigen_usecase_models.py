from pydantic import Field

from lib.core.entity.models import BranchingLaw, EigenResult, LeftBoundaryEnum
from lib.core.sdk.usecase_models import BaseErrorResponse, BaseRequest, BaseResponse


class EigenRequest(BaseRequest):
    """
    Request Model for the Eigen Use Case. Unset fields fall back to the configured defaults.

    @param law: A validated subcritical law.
    @param target_rel_tol: Relative agreement of successive refinement levels.
    @param rtol: Residual target of each eigensolve.
    @param left_boundary: Treatment of the left end of the interval.
    """

    law: BranchingLaw = Field(description="A validated subcritical law.")
    target_rel_tol: float | None = Field(default=None, description="Agreement of successive refinement levels.")
    rtol: float | None = Field(default=None, description="Residual target of each eigensolve.")
    left_boundary: LeftBoundaryEnum | None = Field(default=None, description="Treatment of the left end.")


class EigenResponse(BaseResponse):
    eigen: EigenResult = Field(description="The refined bottom of the spectrum with its history.")


class EigenError(BaseErrorResponse):
    pass
