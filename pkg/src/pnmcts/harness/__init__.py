"""Experiment driver: match series, throughput benchmark, sweeps, CSV."""

from .bench import BenchResult, bench_overhead
from .csvio import COLUMNS, SeriesRow, read_rows, write_rows
from .match import AgentSpec, GameRecord, MatchSpec, SeriesResult, derive_seed, play_game, run_series
from .stats import confidence_interval
from .sweep import SweepConfigError, load_cells, run_sweep

__all__ = [
    "AgentSpec",
    "BenchResult",
    "COLUMNS",
    "GameRecord",
    "MatchSpec",
    "SeriesResult",
    "SeriesRow",
    "SweepConfigError",
    "bench_overhead",
    "confidence_interval",
    "derive_seed",
    "load_cells",
    "play_game",
    "read_rows",
    "run_series",
    "run_sweep",
    "write_rows",
]
