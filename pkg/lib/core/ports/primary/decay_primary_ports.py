from abc import abstractmethod

from lib.core.sdk.usecase import BaseUseCase
from lib.core.usecase_models.decay_usecase_models import DecayError, DecayRequest, DecayResponse


class DecayInputPort(BaseUseCase[DecayRequest, DecayResponse, DecayError]):
    def __init__(
        self, tol: float, n_start: int, n_max: int, agreement: float, monte_carlo_paths: int, state_cap: int
    ) -> None:
        super().__init__()
        self._tol = tol
        self._n_start = n_start
        self._n_max = n_max
        self._agreement = agreement
        self._monte_carlo_paths = monte_carlo_paths
        self._state_cap = state_cap

    @property
    def tol(self) -> float:
        return self._tol

    @property
    def n_start(self) -> int:
        return self._n_start

    @property
    def n_max(self) -> int:
        return self._n_max

    @property
    def agreement(self) -> float:
        return self._agreement

    @property
    def monte_carlo_paths(self) -> int:
        return self._monte_carlo_paths

    @property
    def state_cap(self) -> int:
        return self._state_cap

    @abstractmethod
    def execute(self, request: DecayRequest) -> DecayResponse | DecayError:
        raise NotImplementedError("This method must be implemented by the usecase.")
