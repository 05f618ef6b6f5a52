from typing import Any

from dependency_injector import providers

from lib.core.ports.primary.validate_law_primary_ports import ValidateLawInputPort, ValidateLawOutputPort
from lib.core.sdk.ioc_feature_container import BaseFeatureContainer
from lib.core.usecase.validate_law_usecase import ValidateLawUseCase
from lib.infrastructure.controller.validate_law_controller import ValidateLawController
from lib.infrastructure.presenter.validate_law_presenter import ValidateLawPresenter


class ValidateLawFeatureContainer(BaseFeatureContainer):
    report_repository: Any = providers.Dependency()

    presenter = providers.Factory[ValidateLawOutputPort](ValidateLawPresenter)

    usecase = providers.Factory[ValidateLawInputPort](ValidateLawUseCase, report_repository=report_repository)

    controller = providers.Factory(
        ValidateLawController,
        usecase=usecase,
        presenter=presenter,
    )
