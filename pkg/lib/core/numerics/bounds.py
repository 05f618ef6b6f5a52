"""
Closed-form bounds on the Hardy index obtained by replacing A(s) with simpler envelopes.

Each envelope P with P <= A (resp. P >= A) on [0, 1] gives an upper (resp. lower) bound on D^2, since the
functional (-log s) int_0^s dr / ((1 - r) P(r)) is monotone in P. Linear envelopes b - c s reduce to the
birth-death closed form; quadratic ones are maximised numerically.
"""

import logging
import math
from itertools import combinations
from typing import List, Tuple

from numpy.polynomial import Polynomial
from scipy import optimize

from lib.core.entity.errors import BadParametersError
from lib.core.entity.models import BoundsComparison, BoundsEntry, BoundsReport, BranchingLaw, PairComparison
from lib.core.numerics.hardy import DEFAULT_REL_TOL, HardyFunctional, closed_form_bd
from lib.core.numerics.law import ROOT_TOLERANCE, eval_A, require_subcritical

logger = logging.getLogger(__name__)

LOG2_SQUARED = math.log(2.0) ** 2

CONSTANT = "constant"
SECANT_TANGENT = "secant_tangent"
SLOPE = "slope"
QUADRATIC = "quadratic"

DEGENERATE_TANGENT = "DegenerateTangent"
ENVELOPE_NOT_POSITIVE = "EnvelopeNotPositive"
UPPER_SIDE_INAPPLICABLE = "UpperSideInapplicable"


def _entry(
    name: str,
    d2_lo: float | None,
    d2_hi: float | None,
    notes: List[str] | None = None,
    printed_d2_lo: float | None = None,
    printed_d2_hi: float | None = None,
) -> BoundsEntry:
    return BoundsEntry(
        name=name,
        d2_lo=d2_lo,
        d2_hi=d2_hi,
        lambda_lo=None if d2_hi is None else 1.0 / (4.0 * d2_hi),
        lambda_hi=None if d2_lo is None else 1.0 / d2_lo,
        applicable=d2_lo is not None or d2_hi is not None,
        lower_applicable=d2_lo is not None,
        upper_applicable=d2_hi is not None,
        notes=notes or [],
        printed_d2_lo=printed_d2_lo,
        printed_d2_hi=printed_d2_hi,
    )


def constant_envelope_bounds(law: BranchingLaw) -> BoundsEntry:
    """
    b_0 - m_b <= A(s) <= b_0 gives (log 2)^2 / b_0 <= D^2 <= (log 2)^2 / (b_0 - m_b).
    """
    require_subcritical(law)
    return _entry(CONSTANT, LOG2_SQUARED / law.m_d, LOG2_SQUARED / (law.m_d - law.m_b))


def secant_line(law: BranchingLaw) -> Tuple[float, float]:
    """
    The chord of A between 0 and 1, as (intercept, slope); it lies below the concave A.
    """
    return law.m_d, -law.m_b


def tangent_line(law: BranchingLaw, s0: float) -> Tuple[float, float]:
    """
    The tangent of A at s0, whose slope is -m_b; it lies above the concave A.
    """
    return float(eval_A(law, s0)) + s0 * law.m_b, -law.m_b


def tangent_point(law: BranchingLaw) -> Tuple[float, bool]:
    """
    Solves A'(s0) = -m_b on [0, 1].

    A' decreases from -sum_{j >= 2} b_j to -B''(1) / 2, which brackets -m_b. When b_j = 0 for all j >= 3, A is
    linear and every point is a solution; s0 = 1 is returned together with the degeneracy flag.

    @return: s0 and whether the tangent is degenerate
    @rtype: Tuple[float, bool]
    """
    if all(rate == 0 for rate in law.b[3:]):
        return 1.0, True

    def residual(s: float) -> float:
        return float(eval_A(law, s, order=1)) + law.m_b

    s0 = optimize.bisect(residual, 0.0, 1.0, xtol=ROOT_TOLERANCE)
    return float(s0), False


def secant_tangent_bounds(law: BranchingLaw) -> BoundsEntry:
    require_subcritical(law)
    s0, degenerate = tangent_point(law)
    b0, m_b = law.m_d, law.m_b
    tangent_intercept, _ = tangent_line(law, s0)
    kappa1 = m_b / b0
    kappa2 = m_b / tangent_intercept

    notes: List[str] = []
    if degenerate:
        notes.append(DEGENERATE_TANGENT)
        logger.warning("A is linear: the tangent and the secant coincide (s0 = 1)")

    printed_lo = None
    if m_b - kappa2 > 0:
        printed_lo = kappa2 * math.log1p(math.sqrt(kappa2)) ** 2 / (m_b - kappa2)

    return _entry(
        SECANT_TANGENT,
        d2_lo=closed_form_bd(tangent_intercept, m_b),
        d2_hi=closed_form_bd(b0, m_b),
        notes=notes,
        printed_d2_lo=printed_lo,
        printed_d2_hi=math.log1p(math.sqrt(kappa1)) ** 2 / (b0 - m_b),
    )


def slope_envelope_bounds(law: BranchingLaw) -> BoundsEntry:
    """
    b_0 - (B''(1) / 2) s <= A(s) <= b_0 - (sum_{j >= 2} b_j) s.

    The upper bound on D^2 needs B''(1) < 2 b_0, otherwise the lower line is not positive on [0, 1].
    """
    require_subcritical(law)
    b0 = law.m_d
    half_bpp1 = 0.5 * law.bpp1
    kappa1p = half_bpp1 / b0
    kappa2p = law.birth_mass / b0
    printed_lo = math.log1p(math.sqrt(kappa2p)) ** 2 / (b0 - law.m_b)
    printed_hi = math.log1p(math.sqrt(kappa1p)) ** 2 / (b0 - law.m_b)

    notes: List[str] = []
    d2_hi: float | None = None
    if law.bpp1 < 2.0 * b0:
        d2_hi = closed_form_bd(b0, half_bpp1)
    else:
        notes.append(UPPER_SIDE_INAPPLICABLE)
        logger.warning(f"B''(1) = {law.bpp1} >= 2 b_0: the slope envelope gives no upper bound on D^2")

    return _entry(
        SLOPE,
        d2_lo=closed_form_bd(b0, law.birth_mass),
        d2_hi=d2_hi,
        notes=notes,
        printed_d2_lo=printed_lo,
        printed_d2_hi=printed_hi,
    )


def quadratic_envelopes(law: BranchingLaw) -> Tuple[Tuple[float, float, float], Tuple[float, float, float]]:
    """
    Second-order expansions of A at 0 with the curvature frozen at either end of [0, 1].

    A'' is non-increasing, so F(s) = b_0 + a_1 s + A''(1) s^2 / 2 <= A(s) <= E(s) = b_0 + a_1 s + A''(0) s^2 / 2.

    @return: the coefficients of E and of F
    @rtype: Tuple[Tuple[float, float, float], Tuple[float, float, float]]
    """
    a = law.series.a
    a1 = a[1] if len(a) > 1 else 0.0
    half_curvature_at_zero = a[2] if len(a) > 2 else 0.0
    half_curvature_at_one = float(sum(0.5 * n * (n - 1) * a_n for n, a_n in enumerate(a)))
    return (a[0], a1, half_curvature_at_zero), (a[0], a1, half_curvature_at_one)


def _positive_on_unit_interval(coefficients: Tuple[float, float, float]) -> bool:
    polynomial = Polynomial(coefficients)
    if polynomial(0.0) <= 0 or polynomial(1.0) <= 0:
        return False
    for root in polynomial.roots():
        if abs(root.imag) <= 1e-12 and 0.0 < root.real <= 1.0:
            return False
    return True


def quadratic_envelope_bounds(
    law: BranchingLaw, rel_tol: float = DEFAULT_REL_TOL
) -> Tuple[BoundsEntry, float, float | None]:
    """
    Maximises the functional built on each quadratic envelope.

    @return: the entry with the maximisers s1 (envelope E, lower bound) and s2 (envelope F, upper bound)
    @rtype: Tuple[BoundsEntry, float, float | None]
    """
    require_subcritical(law)
    upper_envelope, lower_envelope = quadratic_envelopes(law)
    lower = HardyFunctional(upper_envelope, rel_tol).maximize()

    notes: List[str] = []
    d2_hi: float | None = None
    s2: float | None = None
    if _positive_on_unit_interval(lower_envelope):
        upper = HardyFunctional(lower_envelope, rel_tol).maximize()
        d2_hi, s2 = upper.d2, upper.s_star
    else:
        notes.append(ENVELOPE_NOT_POSITIVE)
        logger.warning(f"The lower quadratic envelope {lower_envelope} vanishes in (0, 1]: no upper bound on D^2")

    return _entry(QUADRATIC, d2_lo=lower.d2, d2_hi=d2_hi, notes=notes), lower.s_star, s2


def compute_bounds(law: BranchingLaw, rel_tol: float = DEFAULT_REL_TOL) -> BoundsReport:
    require_subcritical(law)
    s0, degenerate = tangent_point(law)
    quadratic, s1, s2 = quadratic_envelope_bounds(law, rel_tol)
    tangent_intercept, _ = tangent_line(law, s0)
    report = BoundsReport(
        entries=[
            constant_envelope_bounds(law),
            secant_tangent_bounds(law),
            slope_envelope_bounds(law),
            quadratic,
        ],
        kappa1=law.m_b / law.m_d,
        kappa2=law.m_b / tangent_intercept,
        s0=s0,
        tangent_degenerate=degenerate,
        kappa1p=0.5 * law.bpp1 / law.m_d,
        kappa2p=law.birth_mass / law.m_d,
        s1=s1,
        s2=s2,
    )
    for entry in report.entries:
        logger.debug(
            f"{entry.name}: D^2 in [{entry.d2_lo}, {entry.d2_hi}], lambda in [{entry.lambda_lo}, {entry.lambda_hi}]"
        )
    return report


def _compare_pair(first: BoundsEntry, second: BoundsEntry) -> PairComparison:
    smaller_upper = None
    if first.lambda_hi is not None and second.lambda_hi is not None:
        smaller_upper = second.name if second.lambda_hi < first.lambda_hi else first.name
    larger_lower = None
    if first.lambda_lo is not None and second.lambda_lo is not None:
        larger_lower = second.name if second.lambda_lo > first.lambda_lo else first.name
    return PairComparison(first=first.name, second=second.name, smaller_upper=smaller_upper, larger_lower=larger_lower)


def compare_bounds(law: BranchingLaw, report: BoundsReport | None = None) -> BoundsComparison:
    """
    Cross-compares the entries of a bounds report and intersects their intervals.

    Ties are attributed to the first entry of a pair. The secant-versus-slope observation counts an inapplicable
    upper side as +inf.

    @param law: the law
    @type law: BranchingLaw
    @param report: the bounds of the law; computed if None
    @type report: BoundsReport | None
    @return: the comparison
    @rtype: BoundsComparison
    """
    require_subcritical(law)
    if report is None:
        report = compute_bounds(law)

    applicable = [entry for entry in report.entries if entry.applicable]
    if not applicable:
        raise BadParametersError("No bound applies to the law")
    pairs = [_compare_pair(first, second) for first, second in combinations(applicable, 2)]

    d2_los = [entry.d2_lo for entry in applicable if entry.d2_lo is not None]
    d2_his = [entry.d2_hi for entry in applicable if entry.d2_hi is not None]
    best_d2_lo = max(d2_los) if d2_los else 0.0
    best_d2_hi = min(d2_his) if d2_his else math.inf
    best_lambda_lo = 1.0 / (4.0 * best_d2_hi) if math.isfinite(best_d2_hi) else 0.0
    best_lambda_hi = 1.0 / best_d2_lo if best_d2_lo > 0 else math.inf

    secant_hi = report.entry(SECANT_TANGENT).d2_hi
    slope_hi = report.entry(SLOPE).d2_hi
    observed = (math.inf if secant_hi is None else secant_hi) < (math.inf if slope_hi is None else slope_hi)
    criterion = law.m_b < 0.5 * law.bpp1

    comparison = BoundsComparison(
        pairs=pairs,
        best_d2_lo=best_d2_lo,
        best_d2_hi=best_d2_hi,
        best_lambda_lo=best_lambda_lo,
        best_lambda_hi=best_lambda_hi,
        non_empty=best_lambda_lo <= best_lambda_hi,
        criterion=criterion,
        secant_upper_tighter=observed,
        criterion_agrees=observed == criterion,
    )
    if not comparison.criterion_agrees:
        logger.warning(f"Secant-versus-slope observation {observed} disagrees with the criterion m_b < B''(1) / 2")
    return comparison
