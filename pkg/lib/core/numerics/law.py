"""
Branching laws: validation of the rate sequence and exact evaluation of B(s) = sum b_j s^j and A(s) = B(s) / (1 - s).
"""

import logging
from typing import List, Mapping, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial
from numpy.typing import ArrayLike, NDArray
from scipy import optimize

from lib.core.entity.errors import (
    ConservationViolationError,
    NegativeRateError,
    NoBirthMassError,
    NonFiniteRateError,
    NotSubcriticalError,
    TooFewRatesError,
    ZeroDeathRateError,
)
from lib.core.entity.models import BranchingLaw, RegimeEnum, RootStructure, SeriesCache

logger = logging.getLogger(__name__)

CONSERVATION_TOLERANCE = 1e-12
ROOT_TOLERANCE = 1e-12


def validate_law(raw_rates: Sequence[float]) -> BranchingLaw:
    """
    Validates a rate sequence b_0..b_J_max and derives its moments.

    b_1 is checked against -sum_{j != 1} b_j, never recomputed.

    @param raw_rates: the rates, indexed from 0
    @type raw_rates: Sequence[float]
    @return: the validated law
    @rtype: BranchingLaw
    """
    rates = np.asarray(raw_rates, dtype=float)
    if rates.ndim != 1 or rates.size < 3:
        raise TooFewRatesError(
            f"A branching law needs rates b_0, b_1 and at least one b_j with j >= 2, got {rates.size}"
        )
    if not np.all(np.isfinite(rates)):
        raise NonFiniteRateError(f"All rates must be finite, got {rates.tolist()}")

    for j, rate in enumerate(rates):
        if j != 1 and rate < 0:
            raise NegativeRateError(f"b_{j} = {rate} is negative")
    if rates[0] <= 0:
        raise ZeroDeathRateError(f"b_0 = {rates[0]} must be positive")

    birth_mass = float(rates[2:].sum())
    if birth_mass <= 0:
        raise NoBirthMassError("sum_{j >= 2} b_j must be positive")

    expected_b1 = -(rates[0] + birth_mass)
    if abs(rates[1] - expected_b1) > CONSERVATION_TOLERANCE:
        raise ConservationViolationError(
            f"b_1 = {rates[1]} but -sum_(j != 1) b_j = {expected_b1}; the rates must sum to zero"
        )

    indices = np.arange(rates.size)
    m_d = float(rates[0])
    m_b = float(np.sum((indices[2:] - 1) * rates[2:]))
    bpp1 = float(np.sum(indices[2:] * (indices[2:] - 1) * rates[2:]))
    bprime1 = m_b - m_d

    if bprime1 < -CONSERVATION_TOLERANCE:
        regime = RegimeEnum.SUBCRITICAL
    elif bprime1 > CONSERVATION_TOLERANCE:
        regime = RegimeEnum.SUPERCRITICAL
    else:
        regime = RegimeEnum.CRITICAL

    law = BranchingLaw(
        b=tuple(float(rate) for rate in rates),
        m_d=m_d,
        m_b=m_b,
        birth_mass=birth_mass,
        bprime1=bprime1,
        bpp1=bpp1,
        regime=regime,
        series=series_cache(rates),
    )
    logger.debug(f"Validated law {law.b}: m_d={m_d}, m_b={m_b}, B'(1)={bprime1}, regime={regime.value}")
    return law


def series_cache(rates: NDArray[np.float64]) -> SeriesCache:
    # a_n = -sum_{k > n} b_k for n >= 1 keeps the sign a_n <= 0 exact
    tails = np.cumsum(rates[::-1])[::-1]
    a = np.empty(rates.size - 1)
    a[0] = rates[0]
    a[1:] = -tails[2:]
    return SeriesCache(a=tuple(float(value) for value in a))


def require_subcritical(law: BranchingLaw) -> None:
    if not law.subcritical:
        raise NotSubcriticalError(
            f"The law is {law.regime.value} (B'(1) = {law.bprime1}); a subcritical law is required"
        )


def eval_B(law: BranchingLaw, s: ArrayLike) -> NDArray[np.float64] | float:
    """
    Evaluates B(s) by Horner's scheme.
    """
    return polynomial.polyval(s, law.b)  # type: ignore[no-any-return]


def eval_A(law: BranchingLaw, s: ArrayLike, order: int = 0) -> NDArray[np.float64] | float:
    """
    Evaluates A(s) or one of its derivatives from the coefficients a_n.

    @param law: the law
    @type law: BranchingLaw
    @param s: abscissae in [0, 1]
    @type s: ArrayLike
    @param order: derivative order
    @type order: int
    @return: A^(order)(s)
    @rtype: NDArray[np.float64] | float
    """
    if order < 0:
        raise ValueError(f"Derivative order must be non-negative, got {order}")
    coefficients = polynomial.polyder(law.series.a, order) if order > 0 else np.asarray(law.series.a)
    return polynomial.polyval(s, coefficients)  # type: ignore[no-any-return]


def roots_of_B(law: BranchingLaw, interval: Tuple[float, float] = (0.0, 1.0)) -> RootStructure:
    """
    Locates the roots of B on [0, 1] and the real roots of A on the given interval.

    A supercritical law has a second root q in (0, 1), found by bisection on A.
    """
    if law.regime == RegimeEnum.SUPERCRITICAL:
        q = optimize.bisect(lambda s: float(eval_A(law, s)), 0.0, 1.0, xtol=ROOT_TOLERANCE)
        roots: Tuple[float, ...] = (float(q), 1.0)
        found_q: float | None = float(q)
    else:
        roots = (1.0,)
        found_q = None

    lo, hi = interval
    a_roots: List[float] = []
    if len(law.series.a) > 1:
        for root in np.polynomial.Polynomial(law.series.a).roots():
            if abs(root.imag) <= 1e-9 * max(1.0, abs(root.real)) and lo <= root.real <= hi:
                a_roots.append(float(root.real))

    return RootStructure(
        roots=roots,
        q=found_q,
        double_root_at_one=law.regime == RegimeEnum.CRITICAL,
        interval=(float(lo), float(hi)),
        a_roots=tuple(sorted(a_roots)),
    )


def birth_death_rates(a: float, b: float) -> List[float]:
    return [a, -(a + b), b]


def skip2_rates(b0: float, b2: float, b3: float) -> List[float]:
    return [b0, -(b0 + b2 + b3), b2, b3]


def rates_from_family(family: str, parameters: Mapping[str, float]) -> List[float]:
    """
    Expands a named family of laws into its rate sequence.

    @param family: "birth_death" (parameters a, b) or "skip2" (parameters b0, b2, b3)
    @type family: str
    @param parameters: the family parameters
    @type parameters: Mapping[str, float]
    @return: the rates b_0..b_J_max
    @rtype: List[float]
    """
    if family == "birth_death":
        return birth_death_rates(parameters["a"], parameters["b"])
    if family == "skip2":
        return skip2_rates(parameters["b0"], parameters["b2"], parameters["b3"])
    raise ValueError(f"Unknown family of laws: {family}")
