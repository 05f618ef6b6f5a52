from typing import List

from pydantic import Field

from lib.core.entity.models import BranchingLaw, RootStructure
from lib.core.sdk.usecase_models import BaseErrorResponse, BaseRequest, BaseResponse


class ValidateLawRequest(BaseRequest):
    """
    Request Model for the Validate Law Use Case. Exactly one of rates and config_path is given.

    @param rates: The rates b_0..b_J_max.
    @param config_path: The path of a run configuration describing the law.
    """

    rates: List[float] | None = Field(default=None, description="The rates b_0..b_J_max.")
    config_path: str | None = Field(default=None, description="Path of a run configuration describing the law.")


class ValidateLawResponse(BaseResponse):
    """
    Response Model for the Validate Law Use Case.

    @param law: The validated law with its moments and flags.
    @param roots: The roots of B on [0, 1].
    """

    law: BranchingLaw = Field(description="The validated law with its moments and flags.")
    roots: RootStructure = Field(description="The roots of B on [0, 1].")


class ValidateLawError(BaseErrorResponse):
    """
    Error Response Model for the Validate Law Use Case.

    @param rates: The rates that failed validation, if they could be read.
    """

    rates: List[float] | None = None
