from lib.core.entity.models import BranchingLaw, DecayMethodEnum
from lib.core.numerics.hardy import hardy_index
from lib.core.usecase_models.decay_usecase_models import DecayError, DecayRequest, DecayResponse
from lib.infrastructure.config.containers import ApplicationContainer


def test_decay_usecase(app_initialization_container: ApplicationContainer, birth_death_law: BranchingLaw) -> None:
    usecase = app_initialization_container.decay_feature.usecase()
    assert usecase is not None
    assert usecase.n_start == 20
    assert usecase.monte_carlo_paths == 4000

    response = usecase.execute(request=DecayRequest(law=birth_death_law, monte_carlo_paths=0, dump_generator=True))
    assert isinstance(response, DecayResponse)
    assert response.monte_carlo is None
    assert response.monte_carlo_survival is None
    assert response.uniformization.method == DecayMethodEnum.UNIFORMIZATION
    assert len(response.survival.times) == 40
    assert response.generator_dump is not None
    assert response.generator_dump.startswith("1 0 2\n")

    hardy = hardy_index(birth_death_law)
    assert hardy.lambda_lo * 0.98 <= response.uniformization.lambda_hat <= hardy.lambda_hi * 1.02


def test_decay_usecase_with_paths(app_initialization_container: ApplicationContainer, skip2_law: BranchingLaw) -> None:
    usecase = app_initialization_container.decay_feature.usecase()
    request = DecayRequest(law=skip2_law, monte_carlo_paths=500, seed=12, n_max=80)

    first = usecase.execute(request=request)
    second = usecase.execute(request=request)
    assert isinstance(first, DecayResponse) and isinstance(second, DecayResponse)
    assert first.monte_carlo is not None
    assert first.monte_carlo.method == DecayMethodEnum.MONTE_CARLO
    assert first.monte_carlo_survival is not None
    assert first.monte_carlo_survival.n_paths == 500
    assert first.monte_carlo_survival == second.monte_carlo_survival
    assert first.generator_dump is None


def test_decay_usecase_errors(
    app_initialization_container: ApplicationContainer,
    birth_death_law: BranchingLaw,
    supercritical_law: BranchingLaw,
) -> None:
    usecase = app_initialization_container.decay_feature.usecase()

    response = usecase.execute(request=DecayRequest(law=supercritical_law))
    assert isinstance(response, DecayError)
    assert response.errorName == "NotSubcritical"

    response = usecase.execute(request=DecayRequest(law=birth_death_law, monte_carlo_paths=10, seed=2**64))
    assert isinstance(response, DecayError)
    assert response.errorName == "InvalidSeedConfig"
    assert response.errorCode == 4


def test_decay_feature_descriptor(app_initialization_container: ApplicationContainer) -> None:
    descriptor = app_initialization_container.decay_feature.feature_descriptor()
    assert descriptor.name == "Decay"
    assert descriptor.tags == ["ctmc"]
