"""CSV emission for series results, one row per completed series."""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass, fields
from typing import Iterable

from .match import SeriesResult

COLUMNS = [
    "game",
    "agent_a",
    "agent_b",
    "params_a",
    "params_b",
    "budget_kind",
    "budget_value",
    "games",
    "wins_a",
    "draws",
    "losses_a",
    "win_rate_a",
    "ci95",
    "forfeits",
    "seed",
]


@dataclass(frozen=True)
class SeriesRow:
    game: str
    agent_a: str
    agent_b: str
    params_a: str
    params_b: str
    budget_kind: str
    budget_value: float
    games: int
    wins_a: int
    draws: int
    losses_a: int
    win_rate_a: float
    ci95: float
    forfeits: int
    seed: int

    def key(self) -> tuple:
        """Identity of the experimental cell (used to resume sweeps)."""
        return (
            self.game,
            self.agent_a,
            self.agent_b,
            self.params_a,
            self.params_b,
            self.budget_kind,
            self.budget_value,
            self.games,
            self.seed,
        )

    def render(self) -> list[str]:
        return [repr(v) if isinstance(v, float) else str(v) for v in (
            self.game, self.agent_a, self.agent_b, self.params_a, self.params_b,
            self.budget_kind, self.budget_value, self.games, self.wins_a, self.draws,
            self.losses_a, self.win_rate_a, self.ci95, self.forfeits, self.seed,
        )]

    @classmethod
    def parse(cls, cells: list[str]) -> "SeriesRow":
        if len(cells) != len(COLUMNS):
            raise ValueError(f"expected {len(COLUMNS)} columns, got {len(cells)}")
        types = {f.name: f.type for f in fields(cls)}
        converted = []
        for name, cell in zip(COLUMNS, cells):
            t = types[name]
            converted.append(int(cell) if t == "int" else float(cell) if t == "float" else cell)
        return cls(*converted)

    @classmethod
    def from_series(cls, result: SeriesResult) -> "SeriesRow":
        spec = result.spec
        return cls(
            game=spec.game_id,
            agent_a=spec.agent_a.kind,
            agent_b=spec.agent_b.kind,
            params_a=spec.agent_a.params_str(),
            params_b=spec.agent_b.params_str(),
            budget_kind=spec.budget_kind,
            budget_value=float(spec.budget_value),
            games=result.games,
            wins_a=result.wins_a,
            draws=result.draws,
            losses_a=result.losses_a,
            win_rate_a=result.win_rate_a,
            ci95=result.ci95,
            forfeits=result.forfeits,
            seed=spec.seed,
        )


def write_rows(path: str, rows: Iterable[SeriesRow], append: bool = False) -> None:
    exists = os.path.exists(path) and os.path.getsize(path) > 0
    mode = "a" if append else "w"
    with open(path, mode, newline="") as fh:
        writer = csv.writer(fh)
        if not (append and exists):
            writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow(row.render())


def read_rows(path: str) -> list[SeriesRow]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return []
        if header != COLUMNS:
            raise ValueError(f"unexpected CSV header in {path}: {header}")
        return [SeriesRow.parse(cells) for cells in reader if cells]
