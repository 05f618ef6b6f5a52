import numpy as np
import pytest

from lib.core.entity.errors import (
    BadParametersError,
    BadTruncationError,
    InvalidSeedConfigError,
    NotSubcriticalError,
)
from lib.core.entity.models import BranchingLaw, DecayMethodEnum
from lib.core.numerics.ctmc import (
    build_generator,
    dump_generator,
    estimate_decay_monte_carlo,
    estimate_decay_uniformization,
    gillespie_paths,
    monte_carlo_time_grid,
    survival,
    transient_distribution,
    transition_p11,
    uniformization_curve,
)
from lib.core.numerics.hardy import hardy_index
from lib.core.numerics.law import validate_law
from lib.core.numerics.sl_eigen import refine


def test_generator_of_birth_death_law(birth_death_law: BranchingLaw) -> None:
    generator = build_generator(birth_death_law, 10)
    q = generator.matrix.toarray()

    assert q.shape == (11, 11)
    assert np.all(q[0] == 0.0)
    np.testing.assert_array_equal(q[1, :3], [2.0, -3.0, 1.0])
    assert q[2, 1] == 8.0
    assert q[2, 2] == -12.0
    assert q[2, 3] == 4.0
    assert generator.uniformization_rate == 300.0


def test_generator_rows_conserve_rates_below_the_cap(skip2_law: BranchingLaw) -> None:
    n_states = 12
    generator = build_generator(skip2_law, n_states)
    q = generator.matrix.toarray()
    row_sums = q.sum(axis=1)

    for i in range(1, n_states + 1):
        if i + skip2_law.j_max - 1 <= n_states:
            assert row_sums[i] == pytest.approx(0.0, abs=1e-12 * i * i)
            assert generator.defect[i] == 0.0
        else:
            assert row_sums[i] + generator.defect[i] == pytest.approx(0.0, abs=1e-12 * i * i)
    assert generator.defect[n_states] == pytest.approx(n_states**2 * (0.3 + 0.3))

    off_diagonal = q - np.diag(np.diag(q))
    assert np.all(off_diagonal >= 0.0)
    rows, columns = np.nonzero(q)
    assert np.all(columns - rows >= -1)
    assert np.all(columns - rows <= skip2_law.j_max - 1)


def test_generator_defect_of_the_last_row(birth_death_law: BranchingLaw) -> None:
    generator = build_generator(birth_death_law, 10)
    assert generator.defect[10] == 100.0
    assert np.all(generator.defect[:10] == 0.0)


def test_generator_rejects_small_caps(birth_death_law: BranchingLaw) -> None:
    with pytest.raises(BadTruncationError):
        build_generator(birth_death_law, 9)


def test_dump_generator(birth_death_law: BranchingLaw) -> None:
    lines = dump_generator(build_generator(birth_death_law, 10)).splitlines()
    assert lines[:3] == ["1 0 2", "1 1 -3", "1 2 1"]
    assert len(lines) == 9 * 3 + 2
    assert lines[-1] == "10 10 -300"


def test_p11_at_short_times(birth_death_law: BranchingLaw) -> None:
    assert transition_p11(birth_death_law, 10, 0.0) == 1.0
    assert transition_p11(birth_death_law, 10, 1e-6) == pytest.approx(1.0 - 3e-6, abs=1e-8)


def test_transient_distribution_is_a_probability(skip2_law: BranchingLaw) -> None:
    generator = build_generator(skip2_law, 40)
    distributions, overflow = transient_distribution(generator, 1, [0.0, 0.5, 1.0, 5.0])
    assert np.all(distributions >= -1e-15)
    assert np.all(distributions <= 1.0 + 1e-15)
    total = distributions.sum(axis=1) + overflow
    assert np.all(total >= 1.0 - 1e-9)
    assert np.all(total <= 1.0 + 1e-12)
    np.testing.assert_array_equal(distributions[0, :3], [0.0, 1.0, 0.0])


def test_transient_distribution_rejects_bad_inputs(birth_death_law: BranchingLaw) -> None:
    generator = build_generator(birth_death_law, 10)
    with pytest.raises(BadTruncationError):
        transient_distribution(generator, 11, [1.0])
    with pytest.raises(BadParametersError):
        transient_distribution(generator, 1, [1.0, 0.5])
    with pytest.raises(BadParametersError):
        transient_distribution(generator, 1, [-1.0])
    with pytest.raises(NotSubcriticalError):
        survival(validate_law([1.0, -2.0, 1.0]), 10, 1.0)


def test_survival_meets_the_default_tolerance_over_long_steps(
    birth_death_law: BranchingLaw, skip2_law: BranchingLaw
) -> None:
    times = np.round(np.arange(0.1, 6.0, 0.1), 1)
    for law in (birth_death_law, skip2_law):
        values = [survival(law, 20, float(t)) for t in times]
        assert all(0.0 < value <= 1.0 + 1e-12 for value in values)
        assert all(later <= earlier + 1e-12 for earlier, later in zip(values, values[1:]))


def test_survival_does_not_depend_on_the_cap(birth_death_law: BranchingLaw) -> None:
    # reaching 40 from 1 has probability 2^-39
    for t in (1.0, 5.0):
        assert abs(survival(birth_death_law, 40, t) - survival(birth_death_law, 80, t)) < 1e-10


def test_survival_decreases_and_dominates_p11(skip2_law: BranchingLaw) -> None:
    times = np.linspace(0.0, 5.0, 26)
    distributions, overflow = transient_distribution(build_generator(skip2_law, 40), 1, times)
    alive = distributions[:, 1:].sum(axis=1) + overflow
    assert np.all(np.diff(alive) <= 1e-12)
    assert np.all(alive >= distributions[:, 1])
    assert alive[0] == pytest.approx(1.0)


def test_uniformization_decay_rate_matches_the_eigenvalue(
    birth_death_law: BranchingLaw, skip2_law: BranchingLaw
) -> None:
    for law in (birth_death_law, skip2_law):
        ell0 = refine(law).ell0
        hardy = hardy_index(law)
        estimate = estimate_decay_uniformization(law, lambda_ref=ell0)

        assert estimate.method == DecayMethodEnum.UNIFORMIZATION
        assert estimate.converged is True
        assert estimate.n_states is not None and estimate.n_states >= 20
        assert hardy.lambda_lo * 0.98 <= estimate.lambda_hat <= hardy.lambda_hi * 1.02
        assert estimate.lambda_hat == pytest.approx(ell0, rel=0.05)
        assert estimate.window is not None and estimate.window[0] < estimate.window[1]
        assert estimate.lambda_p11 is not None and estimate.lambda_p11 > 0


def test_decay_rate_scales_with_the_rates(birth_death_law: BranchingLaw) -> None:
    doubled = validate_law([4.0, -6.0, 2.0])
    base = estimate_decay_uniformization(birth_death_law)
    scaled = estimate_decay_uniformization(doubled)
    assert scaled.lambda_hat == pytest.approx(2.0 * base.lambda_hat, rel=1e-3)


def test_gillespie_agrees_with_uniformization(birth_death_law: BranchingLaw) -> None:
    times = [0.5, 1.0, 2.0]
    simulated = gillespie_paths(birth_death_law, 1, times, 20_000, seed=20240611)
    exact = uniformization_curve(birth_death_law, 40, times)

    assert simulated.method == DecayMethodEnum.MONTE_CARLO
    assert simulated.n_paths == 20_000
    assert simulated.censored == 0
    for p_hat, stderr, p in zip(simulated.survival, simulated.stderr, exact.survival):
        assert stderr > 0
        assert abs(p_hat - p) <= 4.0 * stderr


def test_gillespie_larger_initial_population_survives_longer(birth_death_law: BranchingLaw) -> None:
    times = [0.5, 1.0]
    one = gillespie_paths(birth_death_law, 1, times, 5_000, seed=1)
    three = gillespie_paths(birth_death_law, 3, times, 5_000, seed=1)
    for p1, p3 in zip(one.survival, three.survival):
        assert p3 >= p1


def test_gillespie_is_reproducible(skip2_law: BranchingLaw) -> None:
    times = [0.25, 0.5, 1.0]
    first = gillespie_paths(skip2_law, 1, times, 2_000, seed=7)
    second = gillespie_paths(skip2_law, 1, times, 2_000, seed=7)
    assert first == second


def test_gillespie_rejects_bad_seeds(birth_death_law: BranchingLaw) -> None:
    for seed in (-1, 2**64):
        with pytest.raises(InvalidSeedConfigError):
            gillespie_paths(birth_death_law, 1, [1.0], 10, seed=seed)
    with pytest.raises(InvalidSeedConfigError):
        gillespie_paths(birth_death_law, 1, [1.0], 0, seed=1)
    with pytest.raises(InvalidSeedConfigError):
        gillespie_paths(birth_death_law, 0, [1.0], 10, seed=1)


def test_monte_carlo_decay_rate(birth_death_law: BranchingLaw) -> None:
    ell0 = refine(birth_death_law).ell0
    curve = gillespie_paths(birth_death_law, 1, list(monte_carlo_time_grid(ell0)), 20_000, seed=3)
    estimate = estimate_decay_monte_carlo(curve)

    assert estimate.method == DecayMethodEnum.MONTE_CARLO
    assert estimate.n_paths == 20_000
    assert estimate.stderr is not None and estimate.stderr > 0
    assert estimate.lambda_hat == pytest.approx(ell0, rel=0.25)
