from typing import Any

from dependency_injector import providers

from lib.core.ports.primary.decay_primary_ports import DecayInputPort
from lib.core.sdk.ioc_feature_container import BaseFeatureContainer
from lib.core.usecase.decay_usecase import DecayUseCase


class DecayFeatureContainer(BaseFeatureContainer):
    tol: Any = providers.Dependency()
    n_start: Any = providers.Dependency()
    n_max: Any = providers.Dependency()
    agreement: Any = providers.Dependency()
    monte_carlo_paths: Any = providers.Dependency()
    state_cap: Any = providers.Dependency()

    usecase = providers.Factory[DecayInputPort](
        DecayUseCase,
        tol=tol,
        n_start=n_start,
        n_max=n_max,
        agreement=agreement,
        monte_carlo_paths=monte_carlo_paths,
        state_cap=state_cap,
    )
