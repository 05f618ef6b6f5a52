from typing import Any

from dependency_injector import providers

from lib.core.ports.primary.hardy_index_primary_ports import HardyIndexInputPort
from lib.core.sdk.ioc_feature_container import BaseFeatureContainer
from lib.core.usecase.hardy_index_usecase import HardyIndexUseCase


class HardyIndexFeatureContainer(BaseFeatureContainer):
    rel_tol: Any = providers.Dependency()
    curve_points: Any = providers.Dependency()

    usecase = providers.Factory[HardyIndexInputPort](HardyIndexUseCase, rel_tol=rel_tol, curve_points=curve_points)
