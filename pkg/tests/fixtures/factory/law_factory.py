from typing import List

from faker import Faker

from lib.core.entity.models import BranchingLaw
from lib.core.numerics.law import birth_death_rates, skip2_rates, validate_law


class LawFactory:
    """
    Draws random subcritical laws from a seeded Faker, so that every test run sees the same laws.

    The ratio m_b / b_0 is kept in [0.1, 0.8]: close enough to criticality to be interesting, far enough for the
    numerics to stay cheap.
    """

    def __init__(self, seed: int = 20240611) -> None:
        self.fake = Faker()
        self.fake.seed_instance(seed)

    def uniform(self, lo: float, hi: float) -> float:
        return self.fake.random.uniform(lo, hi)

    def birth_death_parameters(self) -> tuple[float, float]:
        a = self.uniform(0.2, 10.0)
        b = a * self.uniform(0.05, 0.95)
        return a, b

    def birth_death(self) -> BranchingLaw:
        return validate_law(birth_death_rates(*self.birth_death_parameters()))

    def skip2(self, with_b2: bool = True) -> BranchingLaw:
        b0 = self.uniform(0.5, 5.0)
        m_b = b0 * self.uniform(0.1, 0.8)
        # m_b = b2 + 2 b3
        share = self.uniform(0.05, 0.95) if with_b2 else 0.0
        b2 = share * m_b
        b3 = 0.5 * (1.0 - share) * m_b
        return validate_law(skip2_rates(b0, b2, b3))

    def rates(self, j_max: int | None = None) -> List[float]:
        if j_max is None:
            j_max = self.fake.random.randint(2, 6)
        b0 = self.uniform(0.5, 5.0)
        m_b = b0 * self.uniform(0.1, 0.8)
        weights = [self.uniform(0.05, 1.0) for _ in range(2, j_max + 1)]
        scale = m_b / sum((j - 1) * w for j, w in zip(range(2, j_max + 1), weights))
        births = [scale * w for w in weights]
        return [b0, -(b0 + sum(births))] + births

    def law(self, j_max: int | None = None) -> BranchingLaw:
        return validate_law(self.rates(j_max))

    def laws(self, count: int, j_max: int | None = None) -> List[BranchingLaw]:
        return [self.law(j_max) for _ in range(count)]
