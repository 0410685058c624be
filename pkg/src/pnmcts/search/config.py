"""Agent parameters shared by the MCTS-family searchers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class SearchConfig:
    """Parameters for one search invocation.

    Exactly one of `sim_budget` (number of simulations) and `time_budget`
    (wall-clock seconds per move, checked between simulations) must be set.
    """

    exploration: float = math.sqrt(2)  # C: weight of the exploration term
    pn_weight: float = 1.0  # C_pn: weight of the proof-number rank bonus
    sim_budget: Optional[int] = None
    time_budget: Optional[float] = None
    rng_seed: int = 0
    max_nodes: int = 2**21
    playout_cap: int = 1000  # playout moves before scoring 0 (draw-equivalent)

    def __post_init__(self) -> None:
        if (self.sim_budget is None) == (self.time_budget is None):
            raise ValueError("exactly one of sim_budget and time_budget must be set")
        if self.exploration < 0 or self.pn_weight < 0:
            raise ValueError("exploration and pn_weight must be nonnegative")
        if self.sim_budget is not None and self.sim_budget < 0:
            raise ValueError("sim_budget must be nonnegative")
        if self.time_budget is not None and self.time_budget < 0:
            raise ValueError("time_budget must be nonnegative")
        if self.max_nodes < 1 or self.playout_cap < 0:
            raise ValueError("max_nodes must be positive and playout_cap nonnegative")

    @property
    def budget_kind(self) -> str:
        return "sims" if self.sim_budget is not None else "time"

    @property
    def budget_value(self) -> float:
        return self.sim_budget if self.sim_budget is not None else self.time_budget
