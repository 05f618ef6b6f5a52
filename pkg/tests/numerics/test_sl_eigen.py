import math

import numpy as np
import pytest
from numpy.typing import NDArray
from scipy import integrate, linalg

from lib.core.entity.errors import BadTruncationError, NotSubcriticalError
from lib.core.entity.models import BranchingLaw, LeftBoundaryEnum
from lib.core.numerics.hardy import closed_form_bd, hardy_index
from lib.core.numerics.law import birth_death_rates, eval_B, validate_law
from lib.core.numerics.sl_eigen import assemble, assemble_pencil, lattice, leading_eigenvalues, refine, smallest_eig
from tests.fixtures.factory.law_factory import LawFactory

EIGEN_SLACK = 1e-6


def dense(banded: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.diag(banded[1]) + np.diag(banded[0, 1:], 1) + np.diag(banded[0, 1:], -1)  # type: ignore[no-any-return]


def dirichlet_laplacian_eigenvalue(n: int) -> float:
    nodes = np.linspace(0.0, 1.0, n + 2)
    pencil = assemble_pencil(
        nodes,
        1.0 - nodes,
        lambda s: np.ones_like(s),
        lambda s, u: np.ones_like(s),
    )
    ell, _, _ = smallest_eig(pencil.stiffness, pencil.mass)
    return ell


def test_constant_coefficients_give_the_dirichlet_laplacian() -> None:
    coarse = dirichlet_laplacian_eigenvalue(100)
    fine = dirichlet_laplacian_eigenvalue(200)
    assert fine == pytest.approx(math.pi**2, rel=1e-4)
    # Rayleigh-Ritz from above, second order in the mesh size
    assert coarse > fine > math.pi**2
    assert (coarse - math.pi**2) / (fine - math.pi**2) == pytest.approx(4.0, rel=0.05)


def test_pencil_is_symmetric_positive_definite(birth_death_law: BranchingLaw) -> None:
    for left_boundary in LeftBoundaryEnum:
        pencil = assemble(birth_death_law, 1e-2, 1e-2, 64, left_boundary=left_boundary)
        assert pencil.free_left is (left_boundary == LeftBoundaryEnum.NATURAL)
        for banded in (pencil.stiffness, pencil.mass):
            matrix = dense(banded)
            np.testing.assert_array_equal(matrix, matrix.T)
            assert np.all(np.linalg.eigvalsh(matrix) > 0)
            linalg.cholesky_banded(banded, lower=False)


def test_assemble_rejects_bad_truncations(birth_death_law: BranchingLaw, supercritical_law: BranchingLaw) -> None:
    for eps_l, eps_r, n in ((0.0, 1e-2, 64), (1e-2, 0.0, 64), (0.6, 0.6, 64), (1e-2, 1e-2, 4)):
        with pytest.raises(BadTruncationError):
            assemble(birth_death_law, eps_l, eps_r, n)
    with pytest.raises(BadTruncationError):
        assemble_pencil(np.array([0.0, 0.5, 0.4]), np.array([1.0, 0.5, 0.6]), np.ones_like, lambda s, u: s)
    with pytest.raises(NotSubcriticalError):
        assemble(supercritical_law, 1e-2, 1e-2, 64)


def test_smallest_eigenpair(skip2_law: BranchingLaw) -> None:
    pencil = assemble(skip2_law, 1e-3, 1e-3, 200)
    ell, v, residual = smallest_eig(pencil.stiffness, pencil.mass)
    stiffness, mass = dense(pencil.stiffness), dense(pencil.mass)

    assert ell > 0
    assert residual < 1e-6
    assert float(v @ mass @ v) == pytest.approx(1.0, rel=1e-12)
    assert float(v @ stiffness @ v) / float(v @ mass @ v) == pytest.approx(ell, rel=1e-9)
    assert np.all(v > 0)
    assert ell == pytest.approx(float(linalg.eigh(stiffness, mass, eigvals_only=True)[0]), rel=1e-8)

    rng = np.random.default_rng(7)
    for _ in range(20):
        trial = rng.uniform(-1.0, 1.0, size=v.size)
        assert float(trial @ stiffness @ trial) / float(trial @ mass @ trial) >= ell * (1 - 1e-12)


def test_leading_eigenvalues_start_with_the_smallest(skip2_law: BranchingLaw) -> None:
    pencil = assemble(skip2_law, 1e-3, 1e-3, 200)
    ell, _, _ = smallest_eig(pencil.stiffness, pencil.mass)
    leading = leading_eigenvalues(pencil)
    assert len(leading) == 5
    assert leading == sorted(leading)
    assert leading[0] == pytest.approx(ell, rel=1e-8)


def test_lattices_are_nested() -> None:
    step = 0.1
    coarse = lattice(step, 1e-2, 1e-2)
    fine = lattice(step / 2, 1e-3, 1e-3)
    assert np.all(np.isin(np.round(coarse / (step / 2)), np.round(fine / (step / 2))))
    assert fine[0] < coarse[0] and fine[-1] > coarse[-1]


def test_refine_birth_death_law(birth_death_law: BranchingLaw) -> None:
    result = refine(birth_death_law)
    d2 = closed_form_bd(2.0, 1.0)

    assert result.converged is True
    assert result.ell0 > 0
    assert 1.0 / (4.0 * d2) * (1 - EIGEN_SLACK) <= result.ell0 <= 1.0 / d2 * (1 + EIGEN_SLACK)
    assert result.left_boundary == LeftBoundaryEnum.NATURAL
    assert result.n_grid == result.history[-1].n
    assert result.ell0 == result.history[-1].ell
    for earlier, later in zip(result.history, result.history[1:]):
        assert later.ell <= earlier.ell * (1 + 1e-9)
        assert later.n > earlier.n
        assert later.epsilon_right < earlier.epsilon_right
    assert all(value >= 0 for _, value in result.eigfun)
    assert result.leading[0] == pytest.approx(result.ell0, rel=1e-6)


def test_refine_with_dirichlet_left_boundary(birth_death_law: BranchingLaw) -> None:
    natural = refine(birth_death_law)
    dirichlet = refine(birth_death_law, left_boundary=LeftBoundaryEnum.DIRICHLET)
    assert dirichlet.left_boundary == LeftBoundaryEnum.DIRICHLET
    # fewer trial functions, larger Rayleigh-Ritz estimate
    assert dirichlet.ell0 >= natural.ell0 * (1 - EIGEN_SLACK)
    assert dirichlet.history[-1].epsilon_left < dirichlet.history[0].epsilon_left


def test_refined_eigenvalue_lies_in_the_hardy_interval(law_factory: LawFactory) -> None:
    for _ in range(50):
        law = law_factory.law()
        hardy = hardy_index(law)
        result = refine(law)
        assert result.ell0 > 0
        assert hardy.lambda_lo * (1 - EIGEN_SLACK) <= result.ell0 <= hardy.lambda_hi * (1 + EIGEN_SLACK)


def test_refined_eigenvalue_is_below_smooth_rayleigh_quotients(skip2_law: BranchingLaw) -> None:
    result = refine(skip2_law)
    rng = np.random.default_rng(11)
    for _ in range(20):
        alpha = rng.uniform(0.001, 0.4)
        beta = rng.uniform(alpha + 0.1, 0.999)

        # C^1 bump supported on [alpha, beta]
        def g(s: float) -> float:
            return ((s - alpha) * (beta - s)) ** 2

        def dg(s: float) -> float:
            return 2.0 * (s - alpha) * (beta - s) * (alpha + beta - 2.0 * s)

        numerator = integrate.quad(lambda s: s * dg(s) ** 2, alpha, beta, epsrel=1e-12)[0]
        denominator = integrate.quad(lambda s: g(s) ** 2 / float(eval_B(skip2_law, s)), alpha, beta, epsrel=1e-12)[0]
        assert numerator / denominator >= result.ell0 * (1 - 1e-4)


def test_eigenvalue_near_the_critical_limit() -> None:
    a, k = 1.0, 3
    b = a - 10.0**-k
    law = validate_law(birth_death_rates(a, b))
    d2 = closed_form_bd(a, b)
    result = refine(law)
    assert 1.0 / (4.0 * d2) * (1 - EIGEN_SLACK) <= result.ell0 <= 1.0 / d2 * (1 + EIGEN_SLACK)
    assert abs(1.0 / (4.0 * d2) - a / 4.0) <= a * 10.0 ** (-k / 2)


def test_refine_refuses_non_subcritical_laws(critical_law: BranchingLaw) -> None:
    with pytest.raises(NotSubcriticalError):
        refine(critical_law)
