from abc import abstractmethod

from lib.core.ports.primary.bounds_primary_ports import BoundsInputPort
from lib.core.ports.primary.decay_primary_ports import DecayInputPort
from lib.core.ports.primary.eigen_primary_ports import EigenInputPort
from lib.core.ports.primary.hardy_index_primary_ports import HardyIndexInputPort
from lib.core.ports.primary.validate_law_primary_ports import ValidateLawInputPort
from lib.core.ports.secondary.report_repository import ReportRepositoryOutputPort
from lib.core.sdk.presenter import BasePresenter
from lib.core.sdk.usecase import BaseUseCase
from lib.core.usecase_models.run_usecase_models import RunError, RunRequest, RunResponse
from lib.core.view_model.run_view_model import RunViewModel


class RunInputPort(BaseUseCase[RunRequest, RunResponse, RunError]):
    """
    Orchestrates the pipelines of a run. Each pipeline is delegated to the use case of its feature.
    """

    def __init__(
        self,
        report_repository: ReportRepositoryOutputPort,
        validate_law_usecase: ValidateLawInputPort,
        hardy_index_usecase: HardyIndexInputPort,
        bounds_usecase: BoundsInputPort,
        eigen_usecase: EigenInputPort,
        decay_usecase: DecayInputPort,
    ) -> None:
        super().__init__()
        self._report_repository = report_repository
        self._validate_law_usecase = validate_law_usecase
        self._hardy_index_usecase = hardy_index_usecase
        self._bounds_usecase = bounds_usecase
        self._eigen_usecase = eigen_usecase
        self._decay_usecase = decay_usecase

    @property
    def report_repository(self) -> ReportRepositoryOutputPort:
        return self._report_repository

    @property
    def validate_law_usecase(self) -> ValidateLawInputPort:
        return self._validate_law_usecase

    @property
    def hardy_index_usecase(self) -> HardyIndexInputPort:
        return self._hardy_index_usecase

    @property
    def bounds_usecase(self) -> BoundsInputPort:
        return self._bounds_usecase

    @property
    def eigen_usecase(self) -> EigenInputPort:
        return self._eigen_usecase

    @property
    def decay_usecase(self) -> DecayInputPort:
        return self._decay_usecase

    @abstractmethod
    def execute(self, request: RunRequest) -> RunResponse | RunError:
        raise NotImplementedError("This method must be implemented by the usecase.")


class RunOutputPort(BasePresenter[RunResponse, RunError, RunViewModel]):
    @abstractmethod
    def convert_error_response_to_view_model(self, response: RunError) -> RunViewModel:
        raise NotImplementedError(
            "You must implement the convert_error_response_to_view_model method in your presenter"
        )

    @abstractmethod
    def convert_response_to_view_model(self, response: RunResponse) -> RunViewModel:
        raise NotImplementedError("You must implement the convert_response_to_view_model method in your presenter")
