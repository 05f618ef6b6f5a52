from typing import Any

from dependency_injector import providers

from lib.core.ports.primary.run_primary_ports import RunInputPort, RunOutputPort
from lib.core.sdk.ioc_feature_container import BaseFeatureContainer
from lib.core.usecase.run_usecase import RunUseCase
from lib.infrastructure.controller.run_controller import RunController
from lib.infrastructure.presenter.run_presenter import RunPresenter


class RunFeatureContainer(BaseFeatureContainer):
    report_repository: Any = providers.Dependency()
    validate_law_usecase: Any = providers.Dependency()
    hardy_index_usecase: Any = providers.Dependency()
    bounds_usecase: Any = providers.Dependency()
    eigen_usecase: Any = providers.Dependency()
    decay_usecase: Any = providers.Dependency()

    presenter = providers.Factory[RunOutputPort](RunPresenter)

    usecase = providers.Factory[RunInputPort](
        RunUseCase,
        report_repository=report_repository,
        validate_law_usecase=validate_law_usecase,
        hardy_index_usecase=hardy_index_usecase,
        bounds_usecase=bounds_usecase,
        eigen_usecase=eigen_usecase,
        decay_usecase=decay_usecase,
    )

    controller = providers.Factory(
        RunController,
        usecase=usecase,
        presenter=presenter,
    )
