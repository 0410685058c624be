"""Win-rate statistics for match series."""

from __future__ import annotations

import math


def confidence_interval(win_rate: float, games: int) -> float:
    """Half-width of the 95% normal-approximation interval for a win rate.

    ``1.96 * sqrt(p * (1 - p) / n)``, in the same units as `win_rate`
    (fraction in, fraction out).
    """
    if games < 1:
        raise ValueError("confidence interval needs at least one game")
    if not 0.0 <= win_rate <= 1.0:
        raise ValueError(f"win rate must be a fraction in [0, 1], got {win_rate}")
    return 1.96 * math.sqrt(win_rate * (1.0 - win_rate) / games)
