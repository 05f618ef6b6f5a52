"""
The Hardy index D^2 = sup_s (-log s) * int_0^s dr / B(r) and its closed form for birth-death laws.
"""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike, NDArray
from scipy import special

from lib.core.entity.errors import BadParametersError, MaximizerAtBoundaryError, ToleranceNotMetError
from lib.core.entity.models import BranchingLaw, HardyResult
from lib.core.numerics.law import require_subcritical
from lib.core.numerics.optimize import golden_section_maximize

logger = logging.getLogger(__name__)

DEFAULT_REL_TOL = 1e-10
ABSCISSA_TOL = 1e-10
TIE_TOL = 1e-9
STATIONARITY_STEP = 1e-4
SMALL_S = 1e-300
LARGE_S = 1.0 - 1e-16
MAX_BISECTIONS = 60

# Gauss-Legendre pairs on [0, 1]
_COARSE_NODES, _COARSE_WEIGHTS = special.roots_legendre(10)
_FINE_NODES, _FINE_WEIGHTS = special.roots_legendre(20)
_COARSE = (0.5 * (_COARSE_NODES + 1.0), 0.5 * _COARSE_WEIGHTS)
_FINE = (0.5 * (_FINE_NODES + 1.0), 0.5 * _FINE_WEIGHTS)


def scan_grid() -> NDArray[np.float64]:
    """
    Composite grid on which phi is scanned: 2^-k (k = 1..40), 512 uniform points on [1/2, 1 - 2^-12] and
    1 - 2^-k (k = 13..50).
    """
    near_zero = 2.0 ** -np.arange(40, 0, -1, dtype=float)
    middle = np.linspace(0.5, 1.0 - 2.0**-12, 512)
    near_one = 1.0 - 2.0 ** -np.arange(13, 51, dtype=float)
    return np.unique(np.concatenate([near_zero, middle, near_one]))


class HardyFunctional:
    """
    phi(s) = (-log s) * I(s) with I(s) = int_0^s dr / ((1 - r) P(r)) for a polynomial P positive on [0, 1].

    The singular part of I is integrated exactly: with c_k = sum_{n > k} p_n and C(r) = sum c_k r^k,
    P(1) - P(r) = (1 - r) C(r), hence

        I(s) = -log(1 - s) / P(1) + int_0^s C(r) / (P(r) P(1)) dr,

    and only the smooth second term is integrated numerically, by adaptive Gauss-Legendre panels.

    @ivar rel_tol: relative tolerance of the numerical part
    @type rel_tol: float
    """

    def __init__(self, coefficients: Sequence[float], rel_tol: float = DEFAULT_REL_TOL) -> None:
        p = np.asarray(coefficients, dtype=float)
        if p.size == 0 or not np.all(np.isfinite(p)):
            raise BadParametersError(f"Invalid polynomial coefficients {list(coefficients)}")
        if not rel_tol > 0:
            raise BadParametersError(f"rel_tol must be positive, got {rel_tol}")
        self._p = Polynomial(p)
        self._p1 = float(p.sum())
        if self._p1 <= 0:
            raise BadParametersError(f"P(1) = {self._p1} must be positive")
        tails = np.cumsum(p[::-1])[::-1]
        self._c = Polynomial(tails[1:] if p.size > 1 else [0.0])
        self._rel_tol = rel_tol

    @property
    def rel_tol(self) -> float:
        return self._rel_tol

    def _smooth(self, r: NDArray[np.float64]) -> NDArray[np.float64]:
        return self._c(r) / (self._p(r) * self._p1)  # type: ignore[no-any-return]

    def _gauss(
        self, a: NDArray[np.float64], b: NDArray[np.float64], rule: Tuple[NDArray[np.float64], NDArray[np.float64]]
    ) -> NDArray[np.float64]:
        nodes, weights = rule
        width = b - a
        r = a[:, None] + width[:, None] * nodes[None, :]
        return width * (self._smooth(r) @ weights)  # type: ignore[no-any-return]

    def _panel_integrals(
        self, lo: NDArray[np.float64], hi: NDArray[np.float64]
    ) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
        """
        Integrates the smooth part over each panel [lo_i, hi_i], bisecting panels until the 10- and 20-point
        rules agree to rel_tol.
        """
        total = np.zeros(lo.size)
        error = np.zeros(lo.size)
        a, b = lo.astype(float), hi.astype(float)
        owner = np.arange(lo.size)
        for _ in range(MAX_BISECTIONS):
            coarse = self._gauss(a, b, _COARSE)
            fine = self._gauss(a, b, _FINE)
            difference = np.abs(fine - coarse)
            accepted = difference <= self._rel_tol * np.abs(fine) + np.finfo(float).tiny
            np.add.at(total, owner[accepted], fine[accepted])
            np.add.at(error, owner[accepted], difference[accepted])
            if np.all(accepted):
                return total, error
            rejected = ~accepted
            midpoint = 0.5 * (a[rejected] + b[rejected])
            a = np.concatenate([a[rejected], midpoint])
            b = np.concatenate([midpoint, b[rejected]])
            owner = np.concatenate([owner[rejected], owner[rejected]])
        raise ToleranceNotMetError(
            f"Quadrature did not reach rel_tol={self._rel_tol} after {MAX_BISECTIONS} bisections"
        )

    def integral(self, s: float) -> float:
        values, _ = self.integrals(np.array([s]))
        return float(values[0])

    def integrals(self, grid: ArrayLike) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
        """
        I on an ascending grid in (0, 1), accumulated panel by panel.

        @return: the values of I and bounds on their absolute quadrature errors
        @rtype: Tuple[NDArray[np.float64], NDArray[np.float64]]
        """
        points = np.asarray(grid, dtype=float)
        if np.any(points <= 0) or np.any(points >= 1) or np.any(np.diff(points) < 0):
            raise BadParametersError("Integration abscissae must be ascending and inside (0, 1)")
        lo = np.concatenate([[0.0], points[:-1]])
        panels, errors = self._panel_integrals(lo, points)
        values = -np.log1p(-points) / self._p1 + np.cumsum(panels)
        return values, np.cumsum(errors)

    def phi(self, s: float) -> float:
        if s < SMALL_S or s > LARGE_S:
            return 0.0
        return -math.log(s) * self.integral(s)

    def phis(self, grid: ArrayLike) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
        points = np.asarray(grid, dtype=float)
        values = np.zeros(points.size)
        errors = np.zeros(points.size)
        inside = (points >= SMALL_S) & (points <= LARGE_S)
        if np.any(inside):
            integrals, integral_errors = self.integrals(points[inside])
            logs = -np.log(points[inside])
            values[inside] = logs * integrals
            errors[inside] = logs * integral_errors
        return values, errors

    def maximize(self, curve_points: int | None = None) -> HardyResult:
        """
        Scans phi on the composite grid, brackets the best sample and refines it by golden-section search.

        @param curve_points: number of uniform samples on [0, 1] returned as the curve; the scan grid if None
        @type curve_points: int | None
        @return: the supremum with its maximiser and diagnostics
        @rtype: HardyResult
        """
        grid = scan_grid()
        values, errors = self.phis(grid)
        best = int(np.argmax(values))
        if best == 0 or best == grid.size - 1:
            raise MaximizerAtBoundaryError(f"The best sample of phi sits at the grid end s = {grid[best]}")

        s_star, d2 = golden_section_maximize(self.phi, float(grid[best - 1]), float(grid[best + 1]), xtol=ABSCISSA_TOL)
        if d2 < values[best]:
            s_star, d2 = float(grid[best]), float(values[best])

        local_maxima: List[Tuple[float, float]] = [
            (float(grid[i]), float(values[i]))
            for i in range(1, grid.size - 1)
            if values[i] >= values[i - 1] and values[i] >= values[i + 1] and values[i] >= values[best] - TIE_TOL
        ]
        if len(local_maxima) > 1:
            logger.warning(f"phi has {len(local_maxima)} grid-local maxima within {TIE_TOL} of the best sample")

        h = min(STATIONARITY_STEP, 0.5 * s_star, 0.5 * (1.0 - s_star))
        stationarity = (self.phi(s_star + h) - self.phi(s_star - h)) / (2.0 * h)

        if curve_points is None:
            curve = [(0.0, 0.0)] + [(float(s), float(v)) for s, v in zip(grid, values)] + [(1.0, 0.0)]
        else:
            if curve_points < 2:
                raise BadParametersError(f"curve_points must be at least 2, got {curve_points}")
            samples = np.linspace(0.0, 1.0, curve_points)
            sampled_values, _ = self.phis(samples)
            curve = [(float(s), float(v)) for s, v in zip(samples, sampled_values)]

        return HardyResult(
            d2=d2,
            s_star=s_star,
            curve=curve,
            quad_err=float(np.max(errors)),
            lambda_lo=1.0 / (4.0 * d2),
            lambda_hi=1.0 / d2,
            local_maxima=local_maxima,
            stationarity=stationarity,
        )


def _check_abscissa(s: float) -> None:
    if not 0.0 < s < 1.0:
        raise BadParametersError(f"s must lie in (0, 1), got {s}")


def integral_I(law: BranchingLaw, s: float, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """
    int_0^s dr / B(r) for a subcritical law.
    """
    require_subcritical(law)
    _check_abscissa(s)
    return HardyFunctional(law.series.a, rel_tol).integral(s)


def phi(law: BranchingLaw, s: float, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """
    (-log s) * int_0^s dr / B(r); exactly 0 at the ends of [0, 1].
    """
    require_subcritical(law)
    if not 0.0 <= s <= 1.0:
        raise BadParametersError(f"s must lie in [0, 1], got {s}")
    return HardyFunctional(law.series.a, rel_tol).phi(s)


def hardy_index(law: BranchingLaw, rel_tol: float = DEFAULT_REL_TOL, curve_points: int | None = None) -> HardyResult:
    require_subcritical(law)
    result = HardyFunctional(law.series.a, rel_tol).maximize(curve_points=curve_points)
    logger.info(f"Hardy index D^2 = {result.d2} at s* = {result.s_star}")
    return result


def closed_form_bd(a: float, b: float) -> float:
    """
    D^2 of the birth-death law (a, -(a + b), b): [log(1 + sqrt(1 - b / a))]^2 / (a - b).
    """
    if not (math.isfinite(a) and math.isfinite(b) and a > b > 0):
        raise BadParametersError(f"The closed form needs a > b > 0, got a={a}, b={b}")
    return math.log1p(math.sqrt(1.0 - b / a)) ** 2 / (a - b)
