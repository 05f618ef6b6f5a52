from typing import List

from pydantic import Field, model_validator

from lib.core.sdk.controller import BaseController, BaseControllerParameters
from lib.core.usecase.validate_law_usecase import ValidateLawUseCase
from lib.core.usecase_models.validate_law_usecase_models import (
    ValidateLawError,
    ValidateLawRequest,
    ValidateLawResponse,
)
from lib.core.view_model.validate_law_view_model import ValidateLawViewModel
from lib.infrastructure.presenter.validate_law_presenter import ValidateLawPresenter


class ValidateLawControllerParameters(BaseControllerParameters):
    rates: List[float] | None = Field(
        default=None,
        title="Rates",
        description="The rates b_0..b_J_max of the law.",
    )
    config_path: str | None = Field(
        default=None,
        title="Configuration",
        description="Path of a run configuration whose law is validated.",
    )

    @model_validator(mode="after")
    def exactly_one_source(self) -> "ValidateLawControllerParameters":
        if (self.rates is None) == (self.config_path is None):
            raise ValueError("Exactly one of rates and config_path must be given")
        return self


class ValidateLawController(
    BaseController[
        ValidateLawControllerParameters,
        ValidateLawRequest,
        ValidateLawResponse,
        ValidateLawError,
        ValidateLawViewModel,
    ]
):
    def __init__(self, usecase: ValidateLawUseCase, presenter: ValidateLawPresenter) -> None:
        super().__init__(usecase=usecase, presenter=presenter)

    def create_request(self, parameters: ValidateLawControllerParameters | None) -> ValidateLawRequest:
        if parameters is None:
            raise ValueError("Invalid request parameters.")
        else:
            return ValidateLawRequest(rates=parameters.rates, config_path=parameters.config_path)
