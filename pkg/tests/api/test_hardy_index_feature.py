import pytest

from lib.core.entity.models import BranchingLaw
from lib.core.numerics.hardy import closed_form_bd
from lib.core.usecase_models.hardy_index_usecase_models import (
    HardyIndexError,
    HardyIndexRequest,
    HardyIndexResponse,
)
from lib.infrastructure.config.containers import ApplicationContainer


def test_hardy_index_usecase(app_initialization_container: ApplicationContainer, birth_death_law: BranchingLaw) -> None:
    usecase = app_initialization_container.hardy_index_feature.usecase()
    assert usecase is not None
    assert usecase.rel_tol == 1e-10
    assert usecase.curve_points == 257

    response = usecase.execute(request=HardyIndexRequest(law=birth_death_law))
    assert isinstance(response, HardyIndexResponse)
    assert response.hardy.d2 == pytest.approx(closed_form_bd(2.0, 1.0), rel=1e-8)
    assert len(response.hardy.curve) == 257

    response = usecase.execute(request=HardyIndexRequest(law=birth_death_law, curve_points=9))
    assert isinstance(response, HardyIndexResponse)
    assert len(response.hardy.curve) == 9


def test_hardy_index_usecase_errors(
    app_initialization_container: ApplicationContainer, birth_death_law: BranchingLaw, critical_law: BranchingLaw
) -> None:
    usecase = app_initialization_container.hardy_index_feature.usecase()

    response = usecase.execute(request=HardyIndexRequest(law=critical_law))
    assert isinstance(response, HardyIndexError)
    assert response.errorName == "NotSubcritical"
    assert response.errorCode == 4

    response = usecase.execute(request=HardyIndexRequest(law=birth_death_law, rel_tol=-1.0))
    assert isinstance(response, HardyIndexError)
    assert response.errorName == "BadParameters"


def test_hardy_index_feature_descriptor(app_initialization_container: ApplicationContainer) -> None:
    descriptor = app_initialization_container.hardy_index_feature.feature_descriptor()
    assert descriptor.name == "Hardy Index"
    assert descriptor.tags == ["hardy"]
