from typing import Any

from dependency_injector import providers

from lib.core.ports.primary.bounds_primary_ports import BoundsInputPort
from lib.core.sdk.ioc_feature_container import BaseFeatureContainer
from lib.core.usecase.bounds_usecase import BoundsUseCase


class BoundsFeatureContainer(BaseFeatureContainer):
    rel_tol: Any = providers.Dependency()

    usecase = providers.Factory[BoundsInputPort](BoundsUseCase, rel_tol=rel_tol)
