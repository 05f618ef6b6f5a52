from abc import abstractmethod

from lib.core.sdk.usecase import BaseUseCase
from lib.core.usecase_models.bounds_usecase_models import BoundsError, BoundsRequest, BoundsResponse


class BoundsInputPort(BaseUseCase[BoundsRequest, BoundsResponse, BoundsError]):
    def __init__(self, rel_tol: float) -> None:
        super().__init__()
        self._rel_tol = rel_tol

    @property
    def rel_tol(self) -> float:
        return self._rel_tol

    @abstractmethod
    def execute(self, request: BoundsRequest) -> BoundsResponse | BoundsError:
        raise NotImplementedError("This method must be implemented by the usecase.")
