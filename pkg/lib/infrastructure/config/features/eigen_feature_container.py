from typing import Any

from dependency_injector import providers

from lib.core.ports.primary.eigen_primary_ports import EigenInputPort
from lib.core.sdk.ioc_feature_container import BaseFeatureContainer
from lib.core.usecase.eigen_usecase import EigenUseCase


class EigenFeatureContainer(BaseFeatureContainer):
    target_rel_tol: Any = providers.Dependency()
    rtol: Any = providers.Dependency()
    left_boundary: Any = providers.Dependency()

    usecase = providers.Factory[EigenInputPort](
        EigenUseCase,
        target_rel_tol=target_rel_tol,
        rtol=rtol,
        left_boundary=left_boundary,
    )
