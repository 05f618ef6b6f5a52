"""
The branching process as a continuous-time Markov chain on {0, 1, 2, ...}: truncated generator, transient
probabilities by uniformization, decay-rate fits and Gillespie simulation.

State i jumps to i + k - 1 at rate i^2 b_k. State 0 is absorbing.
"""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse, stats

from lib.core.entity.errors import (
    BadParametersError,
    BadTruncationError,
    InvalidSeedConfigError,
    ToleranceNotMetError,
)
from lib.core.entity.models import (
    BranchingLaw,
    DecayEstimate,
    DecayHistoryEntry,
    DecayMethodEnum,
    SurvivalCurve,
    TruncatedGenerator,
)
from lib.core.numerics.bounds import constant_envelope_bounds
from lib.core.numerics.law import require_subcritical

logger = logging.getLogger(__name__)

CTMC = "ctmc"
MIN_STATES = 10
DEFAULT_TOL = 1e-12
DEFAULT_N_START = 20
DEFAULT_N_MAX = 2000
DEFAULT_AGREEMENT = 0.01
SLOPE_STABILITY = 0.02
TIME_GRID_POINTS = 40
MONTE_CARLO_GRID_POINTS = 16
STATE_CAP = 10_000
MAX_SEED = 2**64


def build_generator(law: BranchingLaw, n_states: int) -> TruncatedGenerator:
    """
    The q-matrix q_ij = i^2 b_{j - i + 1} restricted to 0..N. Rates of jumps above N are collected per row in the
    defect instead of being redirected.

    @param law: the law
    @type law: BranchingLaw
    @param n_states: the state cap N
    @type n_states: int
    @return: the truncated generator
    @rtype: TruncatedGenerator
    """
    if n_states < MIN_STATES:
        raise BadTruncationError(f"The state cap must be at least {MIN_STATES}, got {n_states}", error_type=CTMC)

    rows: List[int] = []
    columns: List[int] = []
    rates: List[float] = []
    defect = np.zeros(n_states + 1)
    for i in range(1, n_states + 1):
        scale = float(i * i)
        for k, b_k in enumerate(law.b):
            if b_k == 0:
                continue
            j = i + k - 1
            if j <= n_states:
                rows.append(i)
                columns.append(j)
                rates.append(scale * b_k)
            else:
                defect[i] += scale * b_k

    matrix = sparse.csr_matrix((rates, (rows, columns)), shape=(n_states + 1, n_states + 1))
    return TruncatedGenerator(
        n_states=n_states,
        matrix=matrix,
        defect=defect,
        uniformization_rate=n_states**2 * abs(law.b[1]),
    )


def _killed_transpose(generator: TruncatedGenerator) -> sparse.csr_matrix:
    # one extra sink state collects the defect
    overflow_column = sparse.csr_matrix(generator.defect.reshape(-1, 1))
    augmented = sparse.vstack(
        [sparse.hstack([generator.matrix, overflow_column]), sparse.csr_matrix((1, generator.n_states + 2))]
    )
    return sparse.csr_matrix(augmented.T)


def transient_distribution(
    generator: TruncatedGenerator, initial_state: int, times: ArrayLike, tol: float = DEFAULT_TOL
) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Distribution of the killed chain at each time of an ascending grid, by uniformization.

    Each step between consecutive times sums the Poisson-weighted powers of I + Q / Lambda between the tol / 4
    quantiles of the Poisson law, so the two dropped tails together stay below tol / 2.

    @param generator: the truncated generator
    @type generator: TruncatedGenerator
    @param initial_state: the state at time 0
    @type initial_state: int
    @param times: non-negative ascending times
    @type times: ArrayLike
    @param tol: Poisson mass allowed to be dropped per step
    @type tol: float
    @return: the distributions over 0..N, one row per time, and the overflow mass at each time
    @rtype: Tuple[NDArray[np.float64], NDArray[np.float64]]
    """
    grid = np.atleast_1d(np.asarray(times, dtype=float))
    if np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise BadParametersError("Times must be non-negative and ascending", error_type=CTMC)
    if not 0 <= initial_state <= generator.n_states:
        raise BadTruncationError(f"Initial state {initial_state} is outside 0..{generator.n_states}", error_type=CTMC)

    transpose = _killed_transpose(generator)
    rate = generator.uniformization_rate
    state = np.zeros(generator.n_states + 2)
    state[initial_state] = 1.0

    distributions = np.zeros((grid.size, generator.n_states + 1))
    overflow = np.zeros(grid.size)
    previous = 0.0
    for index, t in enumerate(grid):
        mean = rate * (t - previous)
        if mean > 0:
            lo = int(stats.poisson.ppf(tol / 4, mean))
            hi = int(stats.poisson.isf(tol / 4, mean))
            weights = stats.poisson.pmf(np.arange(lo, hi + 1), mean)
            missing = float(stats.poisson.cdf(lo - 1, mean) + stats.poisson.sf(hi, mean))
            if missing > tol:
                raise ToleranceNotMetError(
                    f"Poisson weights miss {missing} > tol={tol} over a step of length {t - previous}", error_type=CTMC
                )
            power = state
            accumulated = np.zeros_like(state)
            for k in range(hi + 1):
                if k >= lo:
                    accumulated += weights[k - lo] * power
                power = power + transpose @ power / rate
            state = accumulated
        distributions[index] = state[:-1]
        overflow[index] = state[-1]
        previous = t
    return distributions, overflow


def transition_p11(law: BranchingLaw, n_states: int, t: float, tol: float = DEFAULT_TOL) -> float:
    require_subcritical(law)
    distributions, _ = transient_distribution(build_generator(law, n_states), 1, [t], tol)
    return float(distributions[0, 1])


def survival(law: BranchingLaw, n_states: int, t: float, tol: float = DEFAULT_TOL) -> float:
    """
    x_1(t) = 1 - P_10(t), computed as live plus overflow mass of the killed chain.
    """
    require_subcritical(law)
    distributions, overflow = transient_distribution(build_generator(law, n_states), 1, [t], tol)
    return float(distributions[0, 1:].sum() + overflow[0])


def reference_rate(law: BranchingLaw) -> float:
    """
    Geometric mean of the constant-envelope interval on the decay parameter, used to scale time grids.
    """
    entry = constant_envelope_bounds(law)
    assert entry.lambda_lo is not None and entry.lambda_hi is not None
    return math.sqrt(entry.lambda_lo * entry.lambda_hi)


def decay_time_grid(lambda_ref: float, points: int = TIME_GRID_POINTS) -> NDArray[np.float64]:
    return np.geomspace(0.05 / lambda_ref, 10.0 / lambda_ref, points)  # type: ignore[no-any-return]


def monte_carlo_time_grid(lambda_ref: float, points: int = MONTE_CARLO_GRID_POINTS) -> NDArray[np.float64]:
    """
    Geometric grid on [1, 4] / lambda_ref on which simulated survival is sampled.
    """
    return np.geomspace(1.0 / lambda_ref, 4.0 / lambda_ref, points)  # type: ignore[no-any-return]


def local_slopes(times: NDArray[np.float64], values: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.diff(np.log(values)) / np.diff(times)  # type: ignore[no-any-return]


def fit_decay_window(
    times: NDArray[np.float64], values: NDArray[np.float64]
) -> Tuple[float, Tuple[float, float], List[float], bool]:
    """
    Fits -d log(values) / dt over the longest run of at least two local slopes that vary by less than 2% of
    their mean; the later run wins a tie. Without such a run the last third of the grid is used.

    @return: the rate, the fitting window, the local slopes and whether a stable window was found
    @rtype: Tuple[float, Tuple[float, float], List[float], bool]
    """
    positive = values > 0
    t, x = times[positive], values[positive]
    if t.size < 3:
        raise ToleranceNotMetError("Fewer than three positive samples to fit a decay rate", error_type=CTMC)
    slopes = local_slopes(t, x)

    best: Tuple[int, int] | None = None
    for start in range(slopes.size):
        for end in range(start + 1, slopes.size):
            window = slopes[start : end + 1]
            if np.ptp(window) > SLOPE_STABILITY * abs(window.mean()):
                break
            if best is None or end - start >= best[1] - best[0]:
                best = (start, end)

    stable = best is not None
    if best is None:
        first = 2 * t.size // 3
        lo, hi = min(first, t.size - 2), t.size - 1
    else:
        lo, hi = best[0], best[1] + 1
    slope, _ = np.polyfit(t[lo : hi + 1], np.log(x[lo : hi + 1]), 1)
    return -float(slope), (float(t[lo]), float(t[hi])), [float(value) for value in slopes], stable


def estimate_decay_uniformization(
    law: BranchingLaw,
    times: Sequence[float] | None = None,
    tol: float = DEFAULT_TOL,
    n_start: int = DEFAULT_N_START,
    n_max: int = DEFAULT_N_MAX,
    agreement: float = DEFAULT_AGREEMENT,
    lambda_ref: float | None = None,
) -> DecayEstimate:
    """
    Decay rate of the survival of the chain started from 1, with the state cap doubled until two successive
    estimates agree to the given relative tolerance.

    The fit uses the live mass of the killed chain: mass that overflowed is neither alive nor absorbed and would
    otherwise flatten the tail of the curve.

    @param law: a subcritical law
    @type law: BranchingLaw
    @param times: the time grid; geometric on [0.05, 10] / lambda_ref if None
    @type times: Sequence[float] | None
    @param tol: Poisson truncation tolerance
    @type tol: float
    @param n_start: first state cap
    @type n_start: int
    @param n_max: largest state cap tried
    @type n_max: int
    @param agreement: relative agreement of successive estimates
    @type agreement: float
    @param lambda_ref: rate scaling the default time grid; the constant-envelope midpoint if None
    @type lambda_ref: float | None
    @return: the estimate
    @rtype: DecayEstimate
    """
    require_subcritical(law)
    if times is None:
        grid = decay_time_grid(lambda_ref if lambda_ref is not None else reference_rate(law))
    else:
        grid = np.asarray(times, dtype=float)

    history: List[DecayHistoryEntry] = []
    converged = False
    n_states = n_start
    accepted: Tuple[float, Tuple[float, float], List[float], bool] | None = None
    distributions = np.zeros((0, 0))
    overflow = np.zeros(0)
    accepted_states = n_start
    while n_states <= n_max:
        distributions, overflow = transient_distribution(build_generator(law, n_states), 1, grid, tol)
        fit = fit_decay_window(grid, distributions[:, 1:].sum(axis=1))
        logger.debug(f"Decay fit with N={n_states}: lambda={fit[0]}, window={fit[1]}, stable={fit[3]}")
        history.append(DecayHistoryEntry(n_states=n_states, lambda_hat=fit[0], stable_window=fit[3]))
        accepted, accepted_states = fit, n_states
        if len(history) > 1 and abs(history[-1].lambda_hat - history[-2].lambda_hat) <= agreement * fit[0]:
            converged = True
            break
        n_states *= 2

    assert accepted is not None
    lambda_hat, window, slopes, stable = accepted
    if not stable:
        logger.warning("No window of stable log-slopes: the decay is not yet asymptotic on the time grid")
    if not converged:
        logger.warning(f"Decay estimates did not agree within {agreement} up to N={n_max}")

    lambda_p11: float | None
    try:
        lambda_p11 = fit_decay_window(grid, distributions[:, 1])[0]
    except ToleranceNotMetError:
        lambda_p11 = None

    logger.info(f"Uniformization decay rate {lambda_hat} with N={accepted_states}")
    return DecayEstimate(
        lambda_hat=lambda_hat,
        method=DecayMethodEnum.UNIFORMIZATION,
        window=window,
        n_states=accepted_states,
        slopes=slopes,
        stable_window=stable,
        converged=converged,
        history=history,
        lambda_p11=lambda_p11,
        overflow=float(overflow[-1]),
    )


def uniformization_curve(
    law: BranchingLaw, n_states: int, times: Sequence[float], tol: float = DEFAULT_TOL
) -> SurvivalCurve:
    require_subcritical(law)
    distributions, overflow = transient_distribution(build_generator(law, n_states), 1, times, tol)
    values = distributions[:, 1:].sum(axis=1) + overflow
    return SurvivalCurve(
        times=[float(t) for t in times],
        survival=[float(value) for value in values],
        stderr=[0.0] * len(values),
        method=DecayMethodEnum.UNIFORMIZATION,
    )


def gillespie_paths(
    law: BranchingLaw,
    i0: int,
    times: Sequence[float],
    n_paths: int,
    seed: int,
    state_cap: int = STATE_CAP,
) -> SurvivalCurve:
    """
    Empirical survival of simulated paths started from i0.

    Path p draws from a Philox generator keyed by (seed, p), so every path is reproducible on its own. Paths
    reaching the state cap are stopped and counted as alive.

    @param law: a subcritical law
    @type law: BranchingLaw
    @param i0: the initial population
    @type i0: int
    @param times: sampling times
    @type times: Sequence[float]
    @param n_paths: number of paths
    @type n_paths: int
    @param seed: non-negative seed below 2^64
    @type seed: int
    @param state_cap: population at which a path is censored
    @type state_cap: int
    @return: the survival fraction at each time with binomial standard errors
    @rtype: SurvivalCurve
    """
    require_subcritical(law)
    if not 0 <= seed < MAX_SEED:
        raise InvalidSeedConfigError(f"The seed must lie in [0, 2^64), got {seed}")
    if n_paths < 1:
        raise InvalidSeedConfigError(f"At least one path is required, got {n_paths}")
    if i0 < 1:
        raise InvalidSeedConfigError(f"The initial population must be positive, got {i0}")

    grid = np.asarray(times, dtype=float)
    t_max = float(grid.max()) if grid.size else 0.0
    total_rate = -law.b[1]
    displacements = np.array([k - 1 for k, b_k in enumerate(law.b) if k != 1 and b_k > 0])
    cumulative = np.cumsum([b_k for k, b_k in enumerate(law.b) if k != 1 and b_k > 0])
    cumulative = cumulative / cumulative[-1]

    absorption = np.full(n_paths, np.inf)
    censored = 0
    for path in range(n_paths):
        rng = np.random.Generator(np.random.Philox(key=np.array([seed, path], dtype=np.uint64)))
        t, i = 0.0, i0
        while True:
            t += rng.exponential(1.0 / (i * i * total_rate))
            if t > t_max:
                break
            i += int(displacements[np.searchsorted(cumulative, rng.random(), side="right")])
            if i == 0:
                absorption[path] = t
                break
            if i >= state_cap:
                censored += 1
                break

    if censored:
        logger.warning(f"{censored} of {n_paths} paths reached the state cap {state_cap}")
    alive = (absorption[None, :] > grid[:, None]).mean(axis=1)
    return SurvivalCurve(
        times=[float(t) for t in grid],
        survival=[float(p) for p in alive],
        stderr=[float(math.sqrt(p * (1.0 - p) / n_paths)) for p in alive],
        method=DecayMethodEnum.MONTE_CARLO,
        n_paths=n_paths,
        censored=censored,
    )


def estimate_decay_monte_carlo(curve: SurvivalCurve) -> DecayEstimate:
    """
    Weighted least-squares fit of log survival against time over the positive samples of a simulated curve.
    """
    times = np.asarray(curve.times)
    values = np.asarray(curve.survival)
    errors = np.asarray(curve.stderr)
    usable = (values > 0) & (errors > 0)
    if usable.sum() < 3:
        raise ToleranceNotMetError("Fewer than three usable Monte Carlo samples to fit a decay rate", error_type=CTMC)
    t, x, sigma = times[usable], values[usable], errors[usable] / values[usable]
    coefficients, covariance = np.polyfit(t, np.log(x), 1, w=1.0 / sigma, cov="unscaled")
    return DecayEstimate(
        lambda_hat=-float(coefficients[0]),
        method=DecayMethodEnum.MONTE_CARLO,
        window=(float(t[0]), float(t[-1])),
        n_paths=curve.n_paths,
        stderr=float(math.sqrt(covariance[0, 0])),
        slopes=[float(value) for value in local_slopes(t, x)],
    )


def dump_generator(generator: TruncatedGenerator) -> str:
    """
    Coordinate-list dump of the truncated generator, one "i j q_ij" line per stored entry.
    """
    coordinates = generator.matrix.tocoo()
    order = np.lexsort((coordinates.col, coordinates.row))
    return "".join(f"{coordinates.row[k]} {coordinates.col[k]} {coordinates.data[k]:.17g}\n" for k in order)
