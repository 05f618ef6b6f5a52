"""
Cross-checks between the results of the pipelines of a run.
"""

import math
from typing import List

from lib.core.entity.models import (
    BoundsComparison,
    BoundsReport,
    ConsistencyCheck,
    DecayEstimate,
    EigenResult,
    HardyResult,
)

STATIONARITY_LIMIT = 1e-6
BOUNDS_SLACK = 1e-9
EIGEN_SLACK = 1e-6
MONOTONE_SLACK = 1e-9
DECAY_HARDY_SLACK = 0.02
DECAY_EIGEN_AGREEMENT = 0.05


def _within(value: float, lower: float | None, upper: float | None) -> bool:
    if not math.isfinite(value):
        return False
    return (lower is None or lower <= value) and (upper is None or value <= upper)


def hardy_checks(hardy: HardyResult) -> List[ConsistencyCheck]:
    limit = STATIONARITY_LIMIT * max(1.0, hardy.d2)
    return [
        ConsistencyCheck(
            name="hardy_stationary_at_maximizer",
            passed=_within(hardy.stationarity, -limit, limit),
            value=hardy.stationarity,
            lower=-limit,
            upper=limit,
        )
    ]


def bounds_checks(hardy: HardyResult, bounds: BoundsReport, comparison: BoundsComparison) -> List[ConsistencyCheck]:
    """
    D^2 lies in every applicable envelope interval, up to an absolute slack, and the intervals on the decay
    parameter have a common point.
    """
    checks: List[ConsistencyCheck] = []
    for entry in bounds.entries:
        if not entry.applicable:
            continue
        lower = entry.d2_lo - BOUNDS_SLACK if entry.lower_applicable and entry.d2_lo is not None else None
        upper = entry.d2_hi + BOUNDS_SLACK if entry.upper_applicable and entry.d2_hi is not None else None
        checks.append(
            ConsistencyCheck(
                name=f"{entry.name}_bounds_contain_d2",
                passed=_within(hardy.d2, lower, upper),
                value=hardy.d2,
                lower=lower,
                upper=upper,
            )
        )
    checks.append(
        ConsistencyCheck(
            name="lambda_intervals_overlap",
            passed=comparison.non_empty,
            lower=comparison.best_lambda_lo,
            upper=comparison.best_lambda_hi,
        )
    )
    return checks


def eigen_checks(
    hardy: HardyResult, eigen: EigenResult, comparison: BoundsComparison | None = None
) -> List[ConsistencyCheck]:
    checks = [
        ConsistencyCheck(
            name="ell0_in_hardy_interval",
            passed=_within(eigen.ell0, hardy.lambda_lo * (1 - EIGEN_SLACK), hardy.lambda_hi * (1 + EIGEN_SLACK)),
            value=eigen.ell0,
            lower=hardy.lambda_lo * (1 - EIGEN_SLACK),
            upper=hardy.lambda_hi * (1 + EIGEN_SLACK),
        )
    ]
    if comparison is not None and comparison.non_empty:
        checks.append(
            ConsistencyCheck(
                name="ell0_in_bounds_interval",
                passed=_within(
                    eigen.ell0,
                    comparison.best_lambda_lo * (1 - EIGEN_SLACK),
                    comparison.best_lambda_hi * (1 + EIGEN_SLACK),
                ),
                value=eigen.ell0,
                lower=comparison.best_lambda_lo * (1 - EIGEN_SLACK),
                upper=comparison.best_lambda_hi * (1 + EIGEN_SLACK),
            )
        )

    # successive Rayleigh-Ritz estimates on nested trial spaces never increase
    increases = [
        later.ell - earlier.ell
        for earlier, later in zip(eigen.history, eigen.history[1:])
        if later.ell > earlier.ell * (1 + MONOTONE_SLACK)
    ]
    checks.append(
        ConsistencyCheck(
            name="eigen_refinement_monotone",
            passed=not increases,
            value=max(increases) if increases else 0.0,
            upper=0.0,
        )
    )
    return checks


def decay_checks(
    hardy: HardyResult, decay: DecayEstimate, eigen: EigenResult | None = None
) -> List[ConsistencyCheck]:
    lower = hardy.lambda_lo * (1 - DECAY_HARDY_SLACK)
    upper = hardy.lambda_hi * (1 + DECAY_HARDY_SLACK)
    checks = [
        ConsistencyCheck(
            name="lambda_hat_in_hardy_interval",
            passed=_within(decay.lambda_hat, lower, upper),
            value=decay.lambda_hat,
            lower=lower,
            upper=upper,
        )
    ]
    if eigen is not None:
        deviation = abs(decay.lambda_hat - eigen.ell0) / eigen.ell0
        checks.append(
            ConsistencyCheck(
                name="lambda_hat_matches_ell0",
                passed=_within(deviation, None, DECAY_EIGEN_AGREEMENT),
                value=deviation,
                upper=DECAY_EIGEN_AGREEMENT,
            )
        )
    return checks
