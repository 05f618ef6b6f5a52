from abc import abstractmethod

from lib.core.sdk.usecase import BaseUseCase
from lib.core.usecase_models.hardy_index_usecase_models import HardyIndexError, HardyIndexRequest, HardyIndexResponse


class HardyIndexInputPort(BaseUseCase[HardyIndexRequest, HardyIndexResponse, HardyIndexError]):
    def __init__(self, rel_tol: float, curve_points: int | None = None) -> None:
        super().__init__()
        self._rel_tol = rel_tol
        self._curve_points = curve_points

    @property
    def rel_tol(self) -> float:
        return self._rel_tol

    @property
    def curve_points(self) -> int | None:
        return self._curve_points

    @abstractmethod
    def execute(self, request: HardyIndexRequest) -> HardyIndexResponse | HardyIndexError:
        raise NotImplementedError("This method must be implemented by the usecase.")
