from lib.core.entity.models import BranchingLaw, LeftBoundaryEnum
from lib.core.numerics.hardy import closed_form_bd
from lib.core.usecase_models.eigen_usecase_models import EigenError, EigenRequest, EigenResponse
from lib.infrastructure.config.containers import ApplicationContainer


def test_eigen_usecase(app_initialization_container: ApplicationContainer, birth_death_law: BranchingLaw) -> None:
    usecase = app_initialization_container.eigen_feature.usecase()
    assert usecase is not None
    assert usecase.left_boundary == LeftBoundaryEnum.NATURAL

    response = usecase.execute(request=EigenRequest(law=birth_death_law))
    assert isinstance(response, EigenResponse)
    d2 = closed_form_bd(2.0, 1.0)
    assert 1.0 / (4.0 * d2) * (1 - 1e-6) <= response.eigen.ell0 <= 1.0 / d2 * (1 + 1e-6)
    assert response.eigen.left_boundary == LeftBoundaryEnum.NATURAL

    response = usecase.execute(request=EigenRequest(law=birth_death_law, left_boundary=LeftBoundaryEnum.DIRICHLET))
    assert isinstance(response, EigenResponse)
    assert response.eigen.left_boundary == LeftBoundaryEnum.DIRICHLET


def test_eigen_usecase_refuses_critical_laws(
    app_initialization_container: ApplicationContainer, critical_law: BranchingLaw
) -> None:
    usecase = app_initialization_container.eigen_feature.usecase()
    response = usecase.execute(request=EigenRequest(law=critical_law))
    assert isinstance(response, EigenError)
    assert response.errorName == "NotSubcritical"


def test_eigen_feature_descriptor(app_initialization_container: ApplicationContainer) -> None:
    descriptor = app_initialization_container.eigen_feature.feature_descriptor()
    assert descriptor.name == "Eigen"
    assert descriptor.tags == ["sl_eigen"]
