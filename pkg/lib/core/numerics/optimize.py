import math
from typing import Callable, Tuple

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_maximize(
    f: Callable[[float], float], a: float, b: float, xtol: float = 1e-10
) -> Tuple[float, float]:
    """
    Golden-section search for the maximum of f on [a, b].

    f is assumed unimodal on the bracket. Returns the best abscissa found and its value once the bracket is
    narrower than xtol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= xtol:
        midpoint = 0.5 * (a + b)
        return midpoint, f(midpoint)

    steps = int(math.ceil(math.log(xtol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        return c, yc
    return d, yd
