"""Parameter sweeps over match series, driven by a TOML config.

Any list-valued entry becomes a sweep axis; the run covers the Cartesian
product of all axes, one CSV row per cell.  Rows are appended as cells
finish, and rerunning with the same output file skips cells whose key
(game, agents, params, budget, games, seed) already appears, so an
interrupted sweep resumes where it stopped.

Example config::

    [sweep]
    games = ["loa7"]
    games_per_cell = 100
    seed = 42
    budget_kind = "time"
    budget_value = [0.25]

    [agent_a]
    kind = "pnmcts"
    C = 1.4142135623730951
    Cpn = [0.1, 1.0, 1e6]

    [agent_b]
    kind = "mcts"
    C = 1.4142135623730951
"""

from __future__ import annotations

import itertools
import os
import sys
from dataclasses import dataclass
from typing import Callable, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..games import game_ids
from .csvio import SeriesRow, read_rows, write_rows
from .match import AGENT_KINDS, AgentSpec, MatchSpec, run_series


class SweepConfigError(ValueError):
    """The sweep config is malformed; nothing has been run."""


_AGENT_KEYS = {"kind", "C", "Cpn", "expand_one", "max_nodes", "playout_cap"}


def _as_axis(value) -> list:
    if isinstance(value, list):
        if not value:
            raise SweepConfigError("empty parameter list (an axis needs at least one value)")
        return value
    return [value]


def _agent_axes(section: dict, name: str) -> list[dict]:
    unknown = set(section) - _AGENT_KEYS
    if unknown:
        raise SweepConfigError(f"[{name}] has unknown keys: {sorted(unknown)}")
    if "kind" not in section:
        raise SweepConfigError(f"[{name}] needs a 'kind'")
    keys = sorted(section)
    combos = []
    for values in itertools.product(*(_as_axis(section[k]) for k in keys)):
        combos.append(dict(zip(keys, values)))
    return combos


def _agent_spec(params: dict, name: str) -> AgentSpec:
    kind = params["kind"]
    if kind not in AGENT_KINDS:
        raise SweepConfigError(f"[{name}] unknown agent kind {kind!r}")
    kwargs = {"kind": kind}
    if "C" in params:
        kwargs["exploration"] = float(params["C"])
    if "Cpn" in params:
        kwargs["pn_weight"] = float(params["Cpn"])
    if "expand_one" in params:
        kwargs["expand_one"] = bool(params["expand_one"])
    if "max_nodes" in params:
        kwargs["max_nodes"] = int(params["max_nodes"])
    if "playout_cap" in params:
        kwargs["playout_cap"] = int(params["playout_cap"])
    return AgentSpec(**kwargs)


def load_cells(config_text: str) -> list[MatchSpec]:
    """Parse a sweep config into the full list of cells, validating everything
    up front so a bad config never starts any games."""
    try:
        doc = tomllib.loads(config_text)
    except tomllib.TOMLDecodeError as exc:
        raise SweepConfigError(f"config does not parse as TOML: {exc}") from exc
    sweep = doc.get("sweep")
    if not sweep:
        raise SweepConfigError("config needs a [sweep] section")
    for required in ("games", "games_per_cell", "budget_kind", "budget_value"):
        if required not in sweep:
            raise SweepConfigError(f"[sweep] needs '{required}'")
    games = _as_axis(sweep["games"])
    for gid in games:
        if gid not in game_ids():
            raise SweepConfigError(f"unknown game {gid!r}; available: {', '.join(game_ids())}")
    budget_kind = sweep["budget_kind"]
    if budget_kind not in ("time", "sims"):
        raise SweepConfigError(f"budget_kind must be 'time' or 'sims', got {budget_kind!r}")
    budgets = [float(v) for v in _as_axis(sweep["budget_value"])]
    games_per_cell = int(sweep["games_per_cell"])
    seed = int(sweep.get("seed", 0))
    max_plies = int(sweep.get("max_game_plies", 600))
    a_section = doc.get("agent_a")
    b_section = doc.get("agent_b")
    if not a_section or not b_section:
        raise SweepConfigError("config needs [agent_a] and [agent_b] sections")
    cells = []
    for gid in games:
        for budget in budgets:
            for pa in _agent_axes(a_section, "agent_a"):
                for pb in _agent_axes(b_section, "agent_b"):
                    cells.append(
                        MatchSpec(
                            game_id=gid,
                            agent_a=_agent_spec(pa, "agent_a"),
                            agent_b=_agent_spec(pb, "agent_b"),
                            games=games_per_cell,
                            budget_kind=budget_kind,
                            budget_value=budget,
                            seed=seed,
                            max_game_plies=max_plies,
                        )
                    )
    return cells


def _cell_key(spec: MatchSpec) -> tuple:
    return (
        spec.game_id,
        spec.agent_a.kind,
        spec.agent_b.kind,
        spec.agent_a.params_str(),
        spec.agent_b.params_str(),
        spec.budget_kind,
        float(spec.budget_value),
        spec.games,
        spec.seed,
    )


def run_sweep(
    config_text: str,
    out_path: str,
    jobs: int = 1,
    progress: Optional[Callable[[MatchSpec, Optional[SeriesRow]], None]] = None,
) -> list[SeriesRow]:
    """Run every missing cell, appending each finished row to `out_path`.

    Returns all rows for the sweep (previously completed ones included) in
    cell order.
    """
    cells = load_cells(config_text)
    done: dict[tuple, SeriesRow] = {}
    if os.path.exists(out_path):
        for row in read_rows(out_path):
            done[row.key()] = row
    rows = []
    for spec in cells:
        key = _cell_key(spec)
        if key in done:
            rows.append(done[key])
            if progress is not None:
                progress(spec, None)
            continue
        result = run_series(spec, jobs=jobs)
        row = SeriesRow.from_series(result)
        write_rows(out_path, [row], append=True)
        rows.append(row)
        if progress is not None:
            progress(spec, row)
    return rows
