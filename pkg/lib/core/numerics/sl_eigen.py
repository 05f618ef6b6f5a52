"""
Rayleigh-Ritz estimates of the first eigenvalue of -(s y')' = l y / B(s) on (0, 1).

Trial functions are continuous and piecewise linear. Nodes are drawn from a lattice uniform in
t = log(s / (1 - s)), so they accumulate geometrically towards both ends, and successive lattices of the
refinement schedule are nested: every estimate is an upper bound and the sequence is non-increasing.
"""

import logging
import math
from typing import Callable, List, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy import linalg, sparse, special
from scipy.sparse import linalg as sparse_linalg

from lib.core.entity.errors import BadTruncationError, NoConvergenceError
from lib.core.entity.models import (
    BranchingLaw,
    DiscretePencil,
    EigenHistoryEntry,
    EigenResult,
    LeftBoundaryEnum,
)
from lib.core.numerics.law import eval_A, require_subcritical

logger = logging.getLogger(__name__)

DEFAULT_TARGET_REL_TOL = 1e-5
DEFAULT_RTOL = 1e-10
MIN_INTERIOR_NODES = 16
EIGFUN_SAMPLES = 257
SCHEDULE_EXPONENTS = (2, 3, 4, 5, 6, 7, 8)
BASE_LATTICE_STEP = (special.logit(0.99) - special.logit(0.01)) / 257
RQI_SWITCH = 1e-5
ROUNDING_FACTOR = 64.0
MONOTONE_SLACK = 1e-12

_GAUSS_NODES, _GAUSS_WEIGHTS = special.roots_legendre(8)
_XI = 0.5 * (_GAUSS_NODES + 1.0)
_WQ = 0.5 * _GAUSS_WEIGHTS

Coefficient = Callable[[NDArray[np.float64]], NDArray[np.float64]]
Weight = Callable[[NDArray[np.float64], NDArray[np.float64]], NDArray[np.float64]]


def assemble_pencil(
    nodes: NDArray[np.float64],
    complements: NDArray[np.float64],
    p: Coefficient,
    w: Weight,
    free_left: bool = False,
    free_right: bool = False,
) -> DiscretePencil:
    """
    Assembles the stiffness and mass matrices of -(p y')' = l w y with hat functions on the given nodes.

    An end node is an unknown when the corresponding free flag is set, otherwise the trial functions vanish
    there. Element integrals use 8-point Gauss-Legendre rules.

    @param nodes: ascending abscissae, both ends included
    @type nodes: NDArray[np.float64]
    @param complements: 1 - nodes, computed to full relative precision by the caller
    @type complements: NDArray[np.float64]
    @param p: the stiffness coefficient, evaluated at s
    @type p: Coefficient
    @param w: the weight, evaluated at (s, 1 - s)
    @type w: Weight
    @param free_left: whether the first node is an unknown
    @type free_left: bool
    @param free_right: whether the last node is an unknown
    @type free_right: bool
    @return: the pencil in upper banded storage
    @rtype: DiscretePencil
    """
    s = np.asarray(nodes, dtype=float)
    u = np.asarray(complements, dtype=float)
    if s.ndim != 1 or s.size < 3 or s.shape != u.shape or np.any(np.diff(s) <= 0):
        raise BadTruncationError("Nodes must be strictly ascending with matching complements")

    s_a, s_b, u_a, u_b = s[:-1], s[1:], u[:-1], u[1:]
    right_half = s_a >= 0.5
    # lengths of elements near 1 are taken from the complements
    length = np.where(right_half, u_a - u_b, s_b - s_a)
    offsets = length[:, None] * _XI[None, :]
    s_q = np.where(right_half[:, None], 1.0 - (u_a[:, None] - offsets), s_a[:, None] + offsets)
    u_q = np.where(right_half[:, None], u_a[:, None] - offsets, 1.0 - (s_a[:, None] + offsets))

    stiffness_element = (p(s_q) @ _WQ) / length
    weight = w(s_q, u_q) * _WQ[None, :] * length[:, None]
    mass_aa = weight @ (1.0 - _XI) ** 2
    mass_ab = weight @ (_XI * (1.0 - _XI))
    mass_bb = weight @ _XI**2

    k_diag = np.zeros(s.size)
    m_diag = np.zeros(s.size)
    k_diag[:-1] += stiffness_element
    k_diag[1:] += stiffness_element
    m_diag[:-1] += mass_aa
    m_diag[1:] += mass_bb

    first = 0 if free_left else 1
    last = s.size - 1 if free_right else s.size - 2
    n = last - first + 1
    stiffness = np.zeros((2, n))
    mass = np.zeros((2, n))
    stiffness[1] = k_diag[first : last + 1]
    mass[1] = m_diag[first : last + 1]
    stiffness[0, 1:] = -stiffness_element[first:last]
    mass[0, 1:] = mass_ab[first:last]
    return DiscretePencil(stiffness=stiffness, mass=mass, nodes=s[first : last + 1], free_left=free_left)


def _law_coefficients(law: BranchingLaw) -> Tuple[Coefficient, Weight]:
    def p(s: NDArray[np.float64]) -> NDArray[np.float64]:
        return s

    def w(s: NDArray[np.float64], u: NDArray[np.float64]) -> NDArray[np.float64]:
        return 1.0 / (u * np.asarray(eval_A(law, s)))

    return p, w


def _with_left_end(
    t: NDArray[np.float64], left_boundary: LeftBoundaryEnum
) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    s = special.expit(t)
    u = special.expit(-t)
    if left_boundary == LeftBoundaryEnum.NATURAL:
        s = np.concatenate([[0.0], s])
        u = np.concatenate([[1.0], u])
    return s, u


def assemble(
    law: BranchingLaw,
    eps_l: float,
    eps_r: float,
    n: int,
    left_boundary: LeftBoundaryEnum = LeftBoundaryEnum.NATURAL,
) -> DiscretePencil:
    """
    Pencil of the law on [eps_l, 1 - eps_r] with n interior nodes, uniform in log(s / (1 - s)).

    The right end is always a Dirichlet end. A natural left boundary adds an element [0, eps_l] whose left node
    is free.
    """
    require_subcritical(law)
    if not (0.0 < eps_l < 1.0 - eps_r < 1.0) or n < MIN_INTERIOR_NODES:
        raise BadTruncationError(f"Invalid truncation eps_l={eps_l}, eps_r={eps_r}, n={n}")
    t = np.linspace(special.logit(eps_l), -special.logit(eps_r), n + 2)
    s, u = _with_left_end(t, left_boundary)
    p, w = _law_coefficients(law)
    return assemble_pencil(s, u, p, w, free_left=left_boundary == LeftBoundaryEnum.NATURAL)


def lattice(step: float, eps_l: float, eps_r: float) -> NDArray[np.float64]:
    """
    The points k * step of the t-lattice covering [logit(eps_l), logit(1 - eps_r)], outermost points included.
    """
    k_lo = math.floor(special.logit(eps_l) / step)
    k_hi = math.ceil(-special.logit(eps_r) / step)
    return np.arange(k_lo, k_hi + 1, dtype=float) * step


def _banded_matvec(ab: NDArray[np.float64], x: NDArray[np.float64]) -> NDArray[np.float64]:
    y = ab[1] * x
    y[:-1] += ab[0, 1:] * x[1:]
    y[1:] += ab[0, 1:] * x[:-1]
    return y


def _rounding_floor(
    stiffness: NDArray[np.float64], mass: NDArray[np.float64], ell: float, v: NDArray[np.float64]
) -> float:
    magnitude = _banded_matvec(np.abs(stiffness), np.abs(v)) + ell * _banded_matvec(np.abs(mass), np.abs(v))
    return ROUNDING_FACTOR * float(np.finfo(float).eps) * float(np.linalg.norm(magnitude))


def smallest_eig(
    stiffness: NDArray[np.float64],
    mass: NDArray[np.float64],
    rtol: float = DEFAULT_RTOL,
    max_iterations: int = 500,
    start: NDArray[np.float64] | None = None,
) -> Tuple[float, NDArray[np.float64], float]:
    """
    Smallest eigenpair of the symmetric tridiagonal pencil K v = l M v.

    Inverse iteration on the Cholesky factor of K runs until the relative residual drops below 1e-5, then
    Rayleigh quotient iteration finishes. Convergence means ||K v - l M v|| <= rtol ||M v|| plus the rounding
    level of the products.

    @param stiffness: K in upper banded storage
    @type stiffness: NDArray[np.float64]
    @param mass: M in upper banded storage
    @type mass: NDArray[np.float64]
    @param rtol: relative residual target
    @type rtol: float
    @param max_iterations: iteration cap
    @type max_iterations: int
    @param start: initial vector; all ones if None
    @type start: NDArray[np.float64] | None
    @return: the eigenvalue, the eigenvector normalised to v^T M v = 1 with positive entries, the relative residual
    @rtype: Tuple[float, NDArray[np.float64], float]
    """
    n = stiffness.shape[1]
    try:
        factor = linalg.cholesky_banded(stiffness, lower=False)
    except linalg.LinAlgError as error:
        raise NoConvergenceError(f"The stiffness matrix is not positive definite: {error}")

    v = np.ones(n) if start is None else np.asarray(start, dtype=float).copy()
    rayleigh = False
    ell = math.nan
    relative = math.inf
    for iteration in range(max_iterations):
        mv = _banded_matvec(mass, v)
        norm = math.sqrt(float(v @ mv))
        v, mv = v / norm, mv / norm
        ell = float(v @ _banded_matvec(stiffness, v))
        residual = _banded_matvec(stiffness, v) - ell * mv
        mv_norm = float(np.linalg.norm(mv))
        relative = float(np.linalg.norm(residual)) / mv_norm
        if relative * mv_norm <= rtol * mv_norm + _rounding_floor(stiffness, mass, ell, v):
            logger.debug(f"Smallest eigenvalue {ell} after {iteration} iterations, relative residual {relative}")
            break
        if not rayleigh and relative < RQI_SWITCH:
            rayleigh = True
        if rayleigh:
            shifted = np.zeros((3, n))
            shifted[1] = stiffness[1] - ell * mass[1]
            shifted[0, 1:] = stiffness[0, 1:] - ell * mass[0, 1:]
            shifted[2, :-1] = shifted[0, 1:]
            try:
                v = linalg.solve_banded((1, 1), shifted, mv)
            except linalg.LinAlgError:
                # the shift hit an eigenvalue exactly
                break
        else:
            v = linalg.cho_solve_banded((factor, False), mv)
    else:
        raise NoConvergenceError(f"No eigenpair within rtol={rtol} after {max_iterations} iterations")

    if v.sum() < 0:
        v = -v
    return ell, v, relative


def leading_eigenvalues(pencil: DiscretePencil, k: int = 5) -> List[float]:
    """
    The first k eigenvalues of the pencil by shift-invert Lanczos around 0.
    """
    k = max(1, min(k, 5, pencil.size - 2))
    stiffness = sparse.diags(
        [pencil.stiffness[0, 1:], pencil.stiffness[1], pencil.stiffness[0, 1:]], [-1, 0, 1], format="csc"
    )
    mass = sparse.diags([pencil.mass[0, 1:], pencil.mass[1], pencil.mass[0, 1:]], [-1, 0, 1], format="csc")
    values = sparse_linalg.eigsh(stiffness, k=k, M=mass, sigma=0.0, which="LM", return_eigenvectors=False)
    return sorted(float(value) for value in values)


def _sample_eigfun(nodes: NDArray[np.float64], v: NDArray[np.float64]) -> List[Tuple[float, float]]:
    indices = np.unique(np.linspace(0, nodes.size - 1, min(EIGFUN_SAMPLES, nodes.size)).round().astype(int))
    return [(float(nodes[i]), float(v[i])) for i in indices]


def refine(
    law: BranchingLaw,
    target_rel_tol: float = DEFAULT_TARGET_REL_TOL,
    left_boundary: LeftBoundaryEnum = LeftBoundaryEnum.NATURAL,
    rtol: float = DEFAULT_RTOL,
) -> EigenResult:
    """
    Runs the refinement schedule eps = 1e-2, ..., 1e-8 at both ends with the lattice step halved at every level.

    Stops as soon as two successive estimates agree to target_rel_tol; the best estimate is returned with
    converged=False when the schedule runs out.

    @param law: a subcritical law
    @type law: BranchingLaw
    @param target_rel_tol: relative agreement of successive estimates
    @type target_rel_tol: float
    @param left_boundary: treatment of the left end
    @type left_boundary: LeftBoundaryEnum
    @param rtol: residual target of each eigensolve
    @type rtol: float
    @return: the estimate with its refinement history
    @rtype: EigenResult
    """
    require_subcritical(law)
    p, w = _law_coefficients(law)
    free_left = left_boundary == LeftBoundaryEnum.NATURAL

    history: List[EigenHistoryEntry] = []
    converged = False
    previous_nodes: NDArray[np.float64] | None = None
    previous_vector: NDArray[np.float64] | None = None
    pencil: DiscretePencil | None = None
    residual = math.nan
    for level, exponent in enumerate(SCHEDULE_EXPONENTS):
        epsilon = 10.0**-exponent
        t = lattice(BASE_LATTICE_STEP / 2**level, epsilon, epsilon)
        s, u = _with_left_end(t, left_boundary)
        pencil = assemble_pencil(s, u, p, w, free_left=free_left)

        start = None
        if previous_nodes is not None and previous_vector is not None:
            start = np.interp(pencil.nodes, previous_nodes, previous_vector, left=0.0, right=0.0) + 1e-3

        ell, vector, residual = smallest_eig(pencil.stiffness, pencil.mass, rtol=rtol, start=start)
        entry = EigenHistoryEntry(
            epsilon_left=float(special.expit(t[0])), epsilon_right=float(special.expit(-t[-1])), n=pencil.size, ell=ell
        )
        logger.debug(f"Eigen level {level}: n={entry.n}, eps=({entry.epsilon_left}, {entry.epsilon_right}), ell={ell}")

        if history and ell > history[-1].ell + MONOTONE_SLACK * history[-1].ell:
            logger.warning(f"Eigenvalue estimate increased from {history[-1].ell} to {ell} under refinement")
        if history and abs(history[-1].ell - ell) <= target_rel_tol * ell:
            history.append(entry)
            converged = True
            previous_nodes, previous_vector = pencil.nodes, vector
            break
        history.append(entry)
        previous_nodes, previous_vector = pencil.nodes, vector

    assert pencil is not None and previous_nodes is not None and previous_vector is not None
    if not converged:
        logger.warning(f"Eigenvalue refinement did not reach target_rel_tol={target_rel_tol}")

    try:
        leading = leading_eigenvalues(pencil)
    except (sparse_linalg.ArpackError, RuntimeError) as error:
        logger.warning(f"Leading eigenvalues unavailable: {error}")
        leading = []

    final = history[-1]
    logger.info(f"First eigenvalue l0 = {final.ell} (converged={converged}, n={final.n})")
    return EigenResult(
        ell0=final.ell,
        epsilon_left=final.epsilon_left,
        epsilon_right=final.epsilon_right,
        n_grid=final.n,
        history=history,
        eigfun=_sample_eigfun(previous_nodes, previous_vector),
        converged=converged,
        left_boundary=left_boundary,
        residual=residual,
        leading=leading,
    )
