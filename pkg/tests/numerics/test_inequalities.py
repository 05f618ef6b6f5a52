"""
Elementary inequalities behind the closed-form bounds, checked on random samples.
"""

import math

import numpy as np
from faker import Faker
from scipy import integrate


def test_product_of_logarithms_is_maximal_at_t_equal_one(fake: Faker) -> None:
    for _ in range(1000):
        sigma = fake.random.uniform(1e-6, 10.0)
        t = fake.random.uniform(1e-6, 100.0)
        lhs = math.log1p(sigma * t) * math.log1p(sigma / t)
        rhs = math.log1p(sigma) ** 2
        assert lhs <= rhs + 1e-12 * (1.0 + rhs)


def test_log_ratio_bound(fake: Faker) -> None:
    for _ in range(1000):
        x = math.exp(fake.random.uniform(-5.0, 5.0))
        if abs(x - 1.0) < 1e-3:
            continue
        assert math.log(x) / (x - 1.0) <= (1.0 + x) / (2.0 * x)


def test_quadratic_is_negative_on_the_unit_interval(fake: Faker) -> None:
    for _ in range(1000):
        x = fake.random.uniform(0.0, 1.0)
        p = fake.random.uniform(-0.99, 0.99)
        assert p * (1.0 - p) * x**2 - 4.0 * p * x + p - 1.0 < 0.0


def test_log_product_is_concave() -> None:
    def f(x: np.ndarray, p: float) -> np.ndarray:
        return -np.log(x) * np.log((1.0 + p * x) / (1.0 - x))  # type: ignore[no-any-return]

    h = 1e-4
    x = np.linspace(0.01, 0.99, 197)
    for p in np.linspace(-0.99, 0.99, 100):
        second = f(x + h, p) - 2.0 * f(x, p) + f(x - h, p)
        assert np.all(second <= 1e-6)


def test_hardy_type_inequality_for_piecewise_linear_functions(fake: Faker) -> None:
    for _ in range(50):
        alpha = fake.random.uniform(0.01, 0.5)
        beta = fake.random.uniform(alpha + 0.05, 0.99)
        knots = np.linspace(alpha, beta, fake.random.randint(3, 8))
        values = np.array([0.0] + [fake.random.uniform(-1.0, 1.0) for _ in knots[1:-1]] + [0.0])
        slopes = np.diff(values) / np.diff(knots)

        def f(s: float) -> float:
            return float(np.interp(s, knots, values))

        lhs = sum(
            integrate.quad(lambda s: f(s) ** 2 / (s * math.log(s) ** 2), a, b, epsabs=1e-13, epsrel=1e-11)[0]
            for a, b in zip(knots[:-1], knots[1:])
        )
        rhs = 4.0 * sum(slope**2 * (b * b - a * a) / 2.0 for slope, a, b in zip(slopes, knots[:-1], knots[1:]))
        assert lhs <= rhs * (1.0 + 1e-9)
