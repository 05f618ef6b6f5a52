from enum import Enum
from typing import Any, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import sparse


class RegimeEnum(Enum):
    """
    Enum for the criticality regime of a branching law, decided by the sign of B'(1).

    SUBCRITICAL: B'(1) < 0, the mean birth rate is below the mean death rate
    CRITICAL: B'(1) = 0
    SUPERCRITICAL: B'(1) > 0
    """

    SUBCRITICAL = "subcritical"
    CRITICAL = "critical"
    SUPERCRITICAL = "supercritical"


class DecayMethodEnum(Enum):
    """
    Enum for the estimators of the decay parameter.

    UNIFORMIZATION: log-slope fit of the survival of the truncated chain computed by uniformization
    MONTE_CARLO: log-slope fit of the empirical survival of simulated paths
    """

    UNIFORMIZATION = "uniformization"
    MONTE_CARLO = "monte_carlo"


class LeftBoundaryEnum(Enum):
    """
    Enum for the treatment of the left end of the eigenvalue discretisation.

    NATURAL: a free node is kept at s = 0
    DIRICHLET: trial functions vanish at the left truncation point
    """

    NATURAL = "natural"
    DIRICHLET = "dirichlet"


class BaseQMBPModel(BaseModel):
    """
    Base class for all models in the project. Models are immutable once built.
    """

    model_config = ConfigDict(frozen=True)

    def to_json(cls) -> str:
        """
        Dumps the model to a json formatted string. Wrapper around pydantic's model_dump_json method: in case they decide to deprecate it, we only refactor here.
        """
        return cls.model_dump_json()

    def __str__(self) -> str:
        return self.to_json()


class SeriesCache(BaseQMBPModel):
    """
    Coefficients of A(s) = B(s) / (1 - s).

    @param a: a_n = sum_{k <= n} b_k for n = 0..J_max - 1; a_n vanishes from n = J_max on
    @type a: Tuple[float, ...]
    """

    a: Tuple[float, ...]


class BranchingLaw(BaseQMBPModel):
    """
    A validated rate sequence of a quadratic Markov branching process.

    @param b: the rates b_0..b_J_max, per unit time and per squared population
    @type b: Tuple[float, ...]
    @param m_d: mean death rate, b_0
    @type m_d: float
    @param m_b: mean birth rate, sum_{j >= 2} (j - 1) b_j
    @type m_b: float
    @param birth_mass: sum_{j >= 2} b_j
    @type birth_mass: float
    @param bprime1: B'(1) = m_b - m_d
    @type bprime1: float
    @param bpp1: B''(1) = sum_{j >= 2} j (j - 1) b_j
    @type bpp1: float
    @param regime: the criticality regime
    @type regime: RegimeEnum
    @param series: coefficients of A(s)
    @type series: SeriesCache
    """

    b: Tuple[float, ...]
    m_d: float
    m_b: float
    birth_mass: float
    bprime1: float
    bpp1: float
    regime: RegimeEnum
    series: SeriesCache

    @property
    def j_max(self) -> int:
        return len(self.b) - 1

    @property
    def subcritical(self) -> bool:
        return self.regime == RegimeEnum.SUBCRITICAL


class RootStructure(BaseQMBPModel):
    """
    Roots of B on [0, 1] and real roots of A on a requested interval.

    @param roots: roots of B in [0, 1], ascending; always ends with 1
    @type roots: Tuple[float, ...]
    @param q: the root in (0, 1) of a supercritical law
    @type q: float | None
    @param double_root_at_one: whether 1 is a double root (critical law)
    @type double_root_at_one: bool
    @param interval: the interval searched for roots of A
    @type interval: Tuple[float, float]
    @param a_roots: real roots of A inside the interval, ascending
    @type a_roots: Tuple[float, ...]
    """

    roots: Tuple[float, ...]
    q: float | None = None
    double_root_at_one: bool = False
    interval: Tuple[float, float]
    a_roots: Tuple[float, ...] = ()


class HardyResult(BaseQMBPModel):
    """
    The Hardy index of a law or of one of its envelopes.

    @param d2: the supremum of phi over (0, 1)
    @param s_star: the maximising abscissa
    @param curve: (s, phi(s)) samples, ascending in s
    @param quad_err: bound on the absolute quadrature error of the sampled phi values
    @param lambda_lo: 1 / (4 d2)
    @param lambda_hi: 1 / d2
    @param local_maxima: grid-local maxima within tolerance of the best sample
    @param stationarity: central difference of phi at s_star
    """

    d2: float
    s_star: float
    curve: List[Tuple[float, float]]
    quad_err: float
    lambda_lo: float
    lambda_hi: float
    local_maxima: List[Tuple[float, float]] = []
    stationarity: float = 0.0


class BoundsEntry(BaseQMBPModel):
    """
    Closed-form bounds on D^2 and on the decay parameter derived from one envelope of A.

    Sides that do not apply are reported as None. The lambda interval is [1 / (4 d2_hi), 1 / d2_lo].

    @param name: constant, secant_tangent, slope or quadratic
    @param d2_lo: lower bound on D^2
    @param d2_hi: upper bound on D^2
    @param lambda_lo: lower bound on the decay parameter
    @param lambda_hi: upper bound on the decay parameter
    @param applicable: whether at least one side applies
    @param lower_applicable: whether d2_lo is available
    @param upper_applicable: whether d2_hi is available
    @param notes: flags raised while building the entry
    @param printed_d2_lo: value of the closed form as it is usually quoted, for diagnosis
    @param printed_d2_hi: value of the closed form as it is usually quoted, for diagnosis
    """

    name: str
    d2_lo: float | None = None
    d2_hi: float | None = None
    lambda_lo: float | None = None
    lambda_hi: float | None = None
    applicable: bool = True
    lower_applicable: bool = True
    upper_applicable: bool = True
    notes: List[str] = []
    printed_d2_lo: float | None = None
    printed_d2_hi: float | None = None


class BoundsReport(BaseQMBPModel):
    """
    All envelope bounds of a law with the auxiliary scalars used to build them.

    @param entries: constant, secant_tangent, slope and quadratic entries, in that order
    @param kappa1: m_b / b_0
    @param kappa2: m_b / (A(s0) + s0 m_b)
    @param s0: the tangency point, A'(s0) = -m_b; 1 for a degenerate tangent
    @param tangent_degenerate: whether A is linear and the tangent coincides with the secant
    @param kappa1p: B''(1) / (2 b_0)
    @param kappa2p: sum_{j >= 2} b_j / b_0
    @param s1: maximiser of the functional built on the upper quadratic envelope
    @param s2: maximiser of the functional built on the lower quadratic envelope
    """

    entries: List[BoundsEntry]
    kappa1: float
    kappa2: float
    s0: float
    tangent_degenerate: bool
    kappa1p: float
    kappa2p: float
    s1: float
    s2: float | None = None

    def entry(self, name: str) -> BoundsEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)


class PairComparison(BaseQMBPModel):
    """
    Comparison of the lambda intervals of two entries.

    @param first: name of the first entry
    @param second: name of the second entry
    @param smaller_upper: the entry with the smaller upper bound on lambda, if both have one
    @param larger_lower: the entry with the larger lower bound on lambda, if both have one
    """

    first: str
    second: str
    smaller_upper: str | None = None
    larger_lower: str | None = None


class BoundsComparison(BaseQMBPModel):
    """
    Cross-comparison of all applicable bounds.

    @param pairs: pairwise comparisons
    @param best_d2_lo: the largest lower bound on D^2
    @param best_d2_hi: the smallest upper bound on D^2
    @param best_lambda_lo: the largest lower bound on lambda
    @param best_lambda_hi: the smallest upper bound on lambda
    @param non_empty: whether the intersected interval is non-empty
    @param criterion: whether m_b < B''(1) / 2
    @param secant_upper_tighter: whether the secant upper bound on D^2 beats the slope upper bound
    @param criterion_agrees: whether the criterion predicts the observed comparison
    """

    pairs: List[PairComparison]
    best_d2_lo: float
    best_d2_hi: float
    best_lambda_lo: float
    best_lambda_hi: float
    non_empty: bool
    criterion: bool
    secant_upper_tighter: bool
    criterion_agrees: bool


class EigenHistoryEntry(BaseQMBPModel):
    epsilon_left: float
    epsilon_right: float
    n: int
    ell: float


class EigenResult(BaseQMBPModel):
    """
    Rayleigh-Ritz estimate of the first eigenvalue of the Sturm-Liouville problem.

    @param ell0: final estimate, an upper bound on the first eigenvalue
    @param epsilon_left: left truncation offset of the final grid
    @param epsilon_right: right truncation offset of the final grid
    @param n_grid: number of unknowns of the final grid
    @param history: estimates along the refinement schedule
    @param eigfun: (s, phi0(s)) samples, normalised in the weighted norm and positive
    @param converged: whether two successive estimates met the target tolerance
    @param left_boundary: treatment of the left end
    @param residual: relative residual of the final eigenpair
    @param leading: the first few eigenvalues of the final grid, for diagnosis
    """

    ell0: float
    epsilon_left: float
    epsilon_right: float
    n_grid: int
    history: List[EigenHistoryEntry]
    eigfun: List[Tuple[float, float]]
    converged: bool
    left_boundary: LeftBoundaryEnum = LeftBoundaryEnum.NATURAL
    residual: float = 0.0
    leading: List[float] = []


class DecayHistoryEntry(BaseQMBPModel):
    n_states: int
    lambda_hat: float
    stable_window: bool


class DecayEstimate(BaseQMBPModel):
    """
    Estimate of the decay parameter from the log-slope of a survival curve.

    @param lambda_hat: the estimate
    @param method: the estimator used
    @param window: (T1, T2) fitting window
    @param n_states: truncation level of the accepted estimate (uniformization)
    @param n_paths: number of simulated paths (Monte Carlo)
    @param stderr: standard error of the fitted slope (Monte Carlo)
    @param slopes: local two-point log-slopes along the time grid
    @param stable_window: whether a window with stable slopes was found
    @param converged: whether successive truncation levels agreed
    @param history: estimates along the truncation levels
    @param lambda_p11: the same fit applied to P_11(t)
    @param overflow: mass that left the truncated state space by the end of the time grid
    """

    lambda_hat: float
    method: DecayMethodEnum
    window: Tuple[float, float] | None = None
    n_states: int | None = None
    n_paths: int | None = None
    stderr: float | None = None
    slopes: List[float] = []
    stable_window: bool = True
    converged: bool = True
    history: List[DecayHistoryEntry] = []
    lambda_p11: float | None = None
    overflow: float | None = None


class SurvivalCurve(BaseQMBPModel):
    """
    Survival probability of the process started from i0.

    @param times: sampling times
    @param survival: probability of not being absorbed by each time
    @param stderr: binomial standard errors, zero for deterministic curves
    @param method: how the curve was obtained
    @param n_paths: number of simulated paths (Monte Carlo)
    @param censored: number of paths stopped at the state cap
    """

    times: List[float]
    survival: List[float]
    stderr: List[float]
    method: DecayMethodEnum
    n_paths: int | None = None
    censored: int = 0


class TruncatedGenerator(BaseQMBPModel):
    """
    The q-matrix restricted to the states 0..N.

    @param n_states: the state cap N
    @param matrix: (N + 1) x (N + 1) generator in CSR format; row 0 is absorbing
    @param defect: per-row rate of jumps above N
    @param uniformization_rate: N^2 |b_1|
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_states: int
    matrix: sparse.csr_matrix
    defect: Any = Field(description="numpy array of length N + 1")
    uniformization_rate: float


class DiscretePencil(BaseQMBPModel):
    """
    A symmetric tridiagonal pencil (K, M) in the upper banded storage used by scipy.linalg.

    @param stiffness: K, shape (2, n)
    @param mass: M, shape (2, n)
    @param nodes: abscissae of the unknowns
    @param free_left: whether the first unknown sits at the left end of the domain
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    stiffness: Any
    mass: Any
    nodes: Any
    free_left: bool = False

    @property
    def size(self) -> int:
        return int(np.shape(self.stiffness)[1])


class ConsistencyCheck(BaseQMBPModel):
    """
    One cross-validation check of a run.

    @param name: identifier of the check
    @param passed: whether the check passed
    @param value: the checked quantity
    @param lower: lower end of the accepted range
    @param upper: upper end of the accepted range
    """

    name: str
    passed: bool
    value: float | None = None
    lower: float | None = None
    upper: float | None = None
