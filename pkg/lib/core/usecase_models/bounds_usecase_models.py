from pydantic import Field

from lib.core.entity.models import BoundsComparison, BoundsReport, BranchingLaw
from lib.core.sdk.usecase_models import BaseErrorResponse, BaseRequest, BaseResponse


class BoundsRequest(BaseRequest):
    """
    Request Model for the Bounds Use Case.

    @param law: A validated subcritical law.
    @param rel_tol: Relative tolerance of the quadrature used by the quadratic envelopes.
    """

    law: BranchingLaw = Field(description="A validated subcritical law.")
    rel_tol: float | None = Field(default=None, description="Relative tolerance of the envelope quadratures.")


class BoundsResponse(BaseResponse):
    """
    Response Model for the Bounds Use Case.

    @param bounds: The four envelope intervals on D^2 and on the decay parameter.
    @param comparison: Pairwise comparison of the intervals and the best combined interval.
    """

    bounds: BoundsReport = Field(description="The envelope intervals.")
    comparison: BoundsComparison = Field(description="Pairwise comparison of the intervals.")


class BoundsError(BaseErrorResponse):
    pass
