"""Simulation-throughput benchmark: the cost of proof-number bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass

from ..games import make_game
from .match import AgentSpec


@dataclass
class AgentBench:
    kind: str
    params: str
    simulations: int
    elapsed: float
    truncated: bool

    @property
    def sims_per_second(self) -> float:
        return self.simulations / self.elapsed if self.elapsed > 0 else 0.0


@dataclass
class BenchResult:
    game_id: str
    seconds: float
    a: AgentBench
    b: AgentBench

    @property
    def ratio(self) -> float:
        """Agent A's simulation rate over agent B's (conventionally PN-MCTS/MCTS)."""
        return self.a.sims_per_second / self.b.sims_per_second


def bench_overhead(
    game_id: str,
    seconds: float,
    agent_a: AgentSpec,
    agent_b: AgentSpec,
    seed: int = 0,
) -> BenchResult:
    """Run each agent once from the initial position for `seconds` of wall time.

    An agent that stops early on its node cap is reported with a truncation
    flag; its rate is still simulations over its own elapsed time.
    """
    game = make_game(game_id)
    state = game.initial_state()
    sides = []
    for agent in (agent_a, agent_b):
        config = agent.search_config("time", seconds, seed)
        result = agent.run_search(game, state, config)
        sides.append(
            AgentBench(
                kind=agent.kind,
                params=agent.params_str(),
                simulations=result.simulations,
                elapsed=result.elapsed,
                truncated=result.truncated,
            )
        )
    return BenchResult(game_id, seconds, sides[0], sides[1])
