from abc import abstractmethod

from lib.core.entity.models import LeftBoundaryEnum
from lib.core.sdk.usecase import BaseUseCase
from lib.core.usecase_models.eigen_usecase_models import EigenError, EigenRequest, EigenResponse


class EigenInputPort(BaseUseCase[EigenRequest, EigenResponse, EigenError]):
    def __init__(self, target_rel_tol: float, rtol: float, left_boundary: str) -> None:
        super().__init__()
        self._target_rel_tol = target_rel_tol
        self._rtol = rtol
        self._left_boundary = LeftBoundaryEnum(left_boundary)

    @property
    def target_rel_tol(self) -> float:
        return self._target_rel_tol

    @property
    def rtol(self) -> float:
        return self._rtol

    @property
    def left_boundary(self) -> LeftBoundaryEnum:
        return self._left_boundary

    @abstractmethod
    def execute(self, request: EigenRequest) -> EigenResponse | EigenError:
        raise NotImplementedError("This method must be implemented by the usecase.")
