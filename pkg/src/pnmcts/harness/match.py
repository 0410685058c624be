"""Agent-vs-agent match series.

A series plays `games` independent games of one game type between two
configured agents.  Agent A takes the first-player seat in even-indexed
games and the second-player seat in odd ones, so both agents play both
colors equally.  Every move search gets a fresh tree and a seed derived
deterministically from (master seed, game index, ply), which makes whole
series replayable bit-for-bit and lets games run in any order or in
parallel without changing the outcome.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from ..core import Outcome, Player
from ..games import make_game
from ..search import SearchConfig
from ..search.mcts import search as mcts_search
from ..search.pnmcts import pn_mcts_search
from .stats import confidence_interval

AGENT_KINDS = ("mcts", "pnmcts")


@dataclass(frozen=True)
class AgentSpec:
    """One agent's kind and parameters (budget lives on the match spec)."""

    kind: str
    exploration: float = math.sqrt(2)
    pn_weight: float = 1.0
    expand_one: bool = False
    max_nodes: int = 2**21
    playout_cap: int = 1000

    def __post_init__(self) -> None:
        if self.kind not in AGENT_KINDS:
            raise ValueError(f"unknown agent kind {self.kind!r}; expected one of {AGENT_KINDS}")

    def params_str(self) -> str:
        parts = [f"C={self.exploration:g}"]
        if self.kind == "pnmcts":
            parts.append(f"Cpn={self.pn_weight:g}")
            if self.expand_one:
                parts.append("expand-one")
        if self.max_nodes != 2**21:
            parts.append(f"max-nodes={self.max_nodes}")
        if self.playout_cap != 1000:
            parts.append(f"playout-cap={self.playout_cap}")
        return ",".join(parts)

    def search_config(self, budget_kind: str, budget_value: float, seed: int) -> SearchConfig:
        sims = int(budget_value) if budget_kind == "sims" else None
        seconds = float(budget_value) if budget_kind == "time" else None
        return SearchConfig(
            exploration=self.exploration,
            pn_weight=self.pn_weight,
            sim_budget=sims,
            time_budget=seconds,
            rng_seed=seed,
            max_nodes=self.max_nodes,
            playout_cap=self.playout_cap,
        )

    def run_search(self, game, state, config: SearchConfig):
        if self.kind == "mcts":
            return mcts_search(game, state, config)
        return pn_mcts_search(game, state, config, expand_one=self.expand_one)


@dataclass(frozen=True)
class MatchSpec:
    game_id: str
    agent_a: AgentSpec
    agent_b: AgentSpec
    games: int
    budget_kind: str  # "time" | "sims"
    budget_value: float
    seed: int = 0
    max_game_plies: int = 600  # safety cap; a capped game scores as a draw

    def __post_init__(self) -> None:
        if self.budget_kind not in ("time", "sims"):
            raise ValueError(f"budget_kind must be 'time' or 'sims', got {self.budget_kind!r}")
        if self.games < 1:
            raise ValueError("a series needs at least one game")


@dataclass
class GameRecord:
    game_index: int
    a_plays_first: bool
    plies: int
    result_for_a: float  # 1 win, 0.5 draw, 0 loss
    forfeit_by: Optional[str] = None  # "A" or "B" when an illegal move ended the game
    cap_hit: bool = False
    moves: list = field(default_factory=list)  # notation strings in play order
    sims_per_move: list = field(default_factory=list)


def derive_seed(master_seed: int, game_index: int, ply: int) -> int:
    """Stable 63-bit per-move seed; independent of process hash randomisation."""
    digest = hashlib.sha256(f"{master_seed}:{game_index}:{ply}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def play_game(spec: MatchSpec, game_index: int) -> GameRecord:
    """Play one full game; agents alternate seats by game-index parity."""
    game = make_game(spec.game_id)
    a_plays_first = game_index % 2 == 0
    state = game.initial_state()
    record = GameRecord(game_index, a_plays_first, 0, 0.5)
    while True:
        outcome = game.terminal_outcome(state)
        if outcome is not None:
            a_player = Player.FIRST if a_plays_first else Player.SECOND
            record.result_for_a = (outcome.reward_for(a_player) + 1) / 2
            return record
        if record.plies >= spec.max_game_plies:
            record.cap_hit = True
            record.result_for_a = 0.5
            return record
        mover_is_a = (state.to_move is Player.FIRST) == a_plays_first
        agent = spec.agent_a if mover_is_a else spec.agent_b
        config = agent.search_config(
            spec.budget_kind, spec.budget_value, derive_seed(spec.seed, game_index, record.plies)
        )
        result = agent.run_search(game, state, config)
        legal = game.legal_moves(state)
        if result.move not in legal:
            record.forfeit_by = "A" if mover_is_a else "B"
            record.result_for_a = 0.0 if mover_is_a else 1.0
            return record
        record.moves.append(game.render_move(result.move))
        record.sims_per_move.append(result.simulations)
        state = game.apply(state, result.move)
        record.plies += 1


@dataclass
class SeriesResult:
    spec: MatchSpec
    wins_a: int
    draws: int
    losses_a: int
    forfeits: int
    records: list

    @property
    def games(self) -> int:
        return self.wins_a + self.draws + self.losses_a

    @property
    def win_rate_a(self) -> float:
        return (self.wins_a + 0.5 * self.draws) / self.games

    @property
    def ci95(self) -> float:
        return confidence_interval(self.win_rate_a, self.games)


def run_series(
    spec: MatchSpec,
    jobs: int = 1,
    progress: Optional[Callable[[GameRecord], None]] = None,
) -> SeriesResult:
    """Play the whole series; aggregation is a fold in game-index order, so
    the result does not depend on the execution schedule."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(play_game, [spec] * spec.games, range(spec.games), chunksize=1))
        if progress is not None:
            for r in records:
                progress(r)
    else:
        records = []
        for i in range(spec.games):
            r = play_game(spec, i)
            records.append(r)
            if progress is not None:
                progress(r)
    wins = sum(1 for r in records if r.result_for_a == 1.0)
    draws = sum(1 for r in records if r.result_for_a == 0.5)
    losses = sum(1 for r in records if r.result_for_a == 0.0)
    forfeits = sum(1 for r in records if r.forfeit_by is not None)
    return SeriesResult(spec, wins, draws, losses, forfeits, records)
