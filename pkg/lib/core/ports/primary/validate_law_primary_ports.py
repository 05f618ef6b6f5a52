from abc import abstractmethod

from lib.core.ports.secondary.report_repository import ReportRepositoryOutputPort
from lib.core.sdk.presenter import BasePresenter
from lib.core.sdk.usecase import BaseUseCase
from lib.core.usecase_models.validate_law_usecase_models import (
    ValidateLawError,
    ValidateLawRequest,
    ValidateLawResponse,
)
from lib.core.view_model.validate_law_view_model import ValidateLawViewModel


class ValidateLawInputPort(BaseUseCase[ValidateLawRequest, ValidateLawResponse, ValidateLawError]):
    def __init__(self, report_repository: ReportRepositoryOutputPort) -> None:
        super().__init__()
        self._report_repository = report_repository

    @property
    def report_repository(self) -> ReportRepositoryOutputPort:
        return self._report_repository

    @abstractmethod
    def execute(self, request: ValidateLawRequest) -> ValidateLawResponse | ValidateLawError:
        raise NotImplementedError("This method must be implemented by the usecase.")


class ValidateLawOutputPort(BasePresenter[ValidateLawResponse, ValidateLawError, ValidateLawViewModel]):
    @abstractmethod
    def convert_error_response_to_view_model(self, response: ValidateLawError) -> ValidateLawViewModel:
        raise NotImplementedError(
            "You must implement the convert_error_response_to_view_model method in your presenter"
        )

    @abstractmethod
    def convert_response_to_view_model(self, response: ValidateLawResponse) -> ValidateLawViewModel:
        raise NotImplementedError("You must implement the convert_response_to_view_model method in your presenter")
