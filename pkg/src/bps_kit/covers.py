"""Closed-form cover contributions of a rigid rational (-1,-1) curve.

The degree-d, genus-g contribution of an isolated rational curve with
normal bundle O(-1) + O(-1) is known in closed form:

    g = 0:   1 / d^3
    g = 1:   1 / (12 d)
    g >= 2:  |B_{2g}| d^(2g-3) / (2g (2g-2)!)

Feeding these into the inverse transform must collapse everything to a
single unit at (genus 0, degree 1); that collapse is the strongest
end-to-end exercise of the genus-filtered solve this package has.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .transform import KIND_GW, InvariantTable, gw_to_gv

__all__ = ["bernoulli", "conifold_gw", "conifold_gv_table", "conifold_gw_table"]

_cache_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2), exact and cached.

    Uses the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    with _cache_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            s = Fraction(0)
            for k in range(m):
                s += math.comb(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-s / (m + 1))
        return _bernoulli_cache[n]


def conifold_gw(g: int, d: int) -> Fraction:
    """Degree-d cover contribution at genus g, by the three closed forms."""
    if d < 1:
        raise ValueError("degree must be positive")
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if g == 0:
        return Fraction(1, d**3)
    if g == 1:
        return Fraction(1, 12 * d)
    b = bernoulli(2 * g)
    return abs(b) * d ** (2 * g - 3) / (2 * g * math.factorial(2 * g - 2))


def conifold_gw_table(g_max: int, d_max: int) -> InvariantTable:
    """Rank-1 table of the closed-form cover contributions up to the bounds."""
    if d_max < 1:
        raise ValueError("degree bound must be at least 1")
    if g_max < 0:
        raise ValueError("genus bound must be nonnegative")
    entries = {
        (g, (d,)): conifold_gw(g, d)
        for g in range(g_max + 1)
        for d in range(1, d_max + 1)
    }
    return InvariantTable(KIND_GW, 1, g_max, (d_max,), entries)


def conifold_gv_table(g_max: int, d_max: int) -> InvariantTable:
    """Transform of the closed-form table; expected: a lone 1 at (0, 1)."""
    return gw_to_gv(conifold_gw_table(g_max, d_max))
