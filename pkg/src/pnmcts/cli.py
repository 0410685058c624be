"""Command-line interface: match series, throughput bench, sweeps, solving."""

from __future__ import annotations

import argparse
import math
import sys
import time

from .games import game_ids, make_game
from .harness import (
    AgentSpec,
    MatchSpec,
    SeriesRow,
    SweepConfigError,
    bench_overhead,
    run_series,
    run_sweep,
    write_rows,
)
from .search import SearchConfig, solve
from .search.mcts import search as mcts_search
from .search.pnmcts import pn_mcts_search


def _add_agent_args(parser: argparse.ArgumentParser, side: str, default_kind: str) -> None:
    parser.add_argument(f"--{side}", dest=f"{side}_kind", default=default_kind,
                        choices=("mcts", "pnmcts"), help=f"agent {side.upper()} kind")
    parser.add_argument(f"--{side}.C", dest=f"{side}_c", type=float, default=math.sqrt(2),
                        help=f"exploration constant for agent {side.upper()}")
    parser.add_argument(f"--{side}.Cpn", dest=f"{side}_cpn", type=float, default=1.0,
                        help=f"proof-number rank weight for agent {side.upper()} (pnmcts only)")
    parser.add_argument(f"--{side}.expand-one", dest=f"{side}_expand_one", action="store_true",
                        help="compatibility mode: single-child expansion (pnmcts, needs Cpn=0)")
    parser.add_argument(f"--{side}.max-nodes", dest=f"{side}_max_nodes", type=int, default=2**21)
    parser.add_argument(f"--{side}.playout-cap", dest=f"{side}_playout_cap", type=int, default=1000)


def _agent_from_args(args: argparse.Namespace, side: str) -> AgentSpec:
    return AgentSpec(
        kind=getattr(args, f"{side}_kind"),
        exploration=getattr(args, f"{side}_c"),
        pn_weight=getattr(args, f"{side}_cpn"),
        expand_one=getattr(args, f"{side}_expand_one"),
        max_nodes=getattr(args, f"{side}_max_nodes"),
        playout_cap=getattr(args, f"{side}_playout_cap"),
    )


def _budget_from_args(args: argparse.Namespace) -> tuple[str, float]:
    if (args.time is None) == (args.sims is None):
        raise SystemExit("exactly one of --time and --sims is required")
    if args.time is not None:
        return "time", args.time
    return "sims", float(args.sims)


def cmd_match(args: argparse.Namespace) -> int:
    budget_kind, budget_value = _budget_from_args(args)
    spec = MatchSpec(
        game_id=args.game,
        agent_a=_agent_from_args(args, "a"),
        agent_b=_agent_from_args(args, "b"),
        games=args.games,
        budget_kind=budget_kind,
        budget_value=budget_value,
        seed=args.seed,
        max_game_plies=args.max_plies,
    )
    done = 0

    def show(record) -> None:
        nonlocal done
        done += 1
        if not args.quiet:
            tag = {1.0: "A", 0.5: "draw", 0.0: "B"}[record.result_for_a]
            print(f"game {record.game_index:4d}: {tag:4s} in {record.plies} plies", flush=True)

    result = run_series(spec, jobs=args.jobs, progress=show)
    row = SeriesRow.from_series(result)
    print(
        f"{spec.game_id}: A={spec.agent_a.kind}[{spec.agent_a.params_str()}] "
        f"B={spec.agent_b.kind}[{spec.agent_b.params_str()}] "
        f"games={result.games} +{result.wins_a} ={result.draws} -{result.losses_a} "
        f"win_rate_a={result.win_rate_a:.3f} (±{result.ci95:.3f}) forfeits={result.forfeits}"
    )
    if args.out:
        write_rows(args.out, [row], append=args.append)
        print(f"wrote {args.out}")
    return 1 if result.forfeits else 0


def cmd_bench(args: argparse.Namespace) -> int:
    result = bench_overhead(
        args.game, args.seconds, _agent_from_args(args, "a"), _agent_from_args(args, "b"),
        seed=args.seed,
    )
    for side in (result.a, result.b):
        flag = " (truncated at node cap)" if side.truncated else ""
        print(
            f"{result.game_id} {side.kind}[{side.params}]: {side.simulations} simulations "
            f"in {side.elapsed:.2f}s = {side.sims_per_second:.1f}/s{flag}"
        )
    print(f"ratio (A/B): {result.ratio:.3f}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    with open(args.config) as fh:
        config_text = fh.read()

    def show(spec, row) -> None:
        label = (
            f"{spec.game_id} A[{spec.agent_a.params_str()}] vs B[{spec.agent_b.params_str()}] "
            f"{spec.budget_kind}={spec.budget_value:g}"
        )
        if row is None:
            print(f"skip (done): {label}", flush=True)
        else:
            print(f"done: {label} win_rate_a={row.win_rate_a:.3f} (±{row.ci95:.3f})", flush=True)

    try:
        rows = run_sweep(config_text, args.out, jobs=args.jobs, progress=show)
    except SweepConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    print(f"{len(rows)} rows in {args.out}")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    game = make_game(args.game)
    state = game.initial_state()
    if args.position:
        for token in args.position.replace(",", " ").split():
            state = game.apply(state, game.parse_move(token))
    start = time.monotonic()
    result = solve(game, state, max_nodes=args.max_nodes)
    print(
        f"{args.game}: {result.verdict.value} (goal: win for {state.to_move.name}) "
        f"nodes={result.nodes} time={result.elapsed:.3f}s pn={result.root_pn} dpn={result.root_dpn}"
    )
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="pnmcts", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_match = sub.add_parser("match", help="play an agent-vs-agent series")
    p_match.add_argument("--game", required=True, choices=game_ids())
    _add_agent_args(p_match, "a", "pnmcts")
    _add_agent_args(p_match, "b", "mcts")
    p_match.add_argument("--games", type=int, required=True)
    p_match.add_argument("--time", type=float, default=None, help="seconds per move")
    p_match.add_argument("--sims", type=int, default=None, help="simulations per move")
    p_match.add_argument("--seed", type=int, default=0)
    p_match.add_argument("--max-plies", type=int, default=600)
    p_match.add_argument("--jobs", type=int, default=1)
    p_match.add_argument("--out", default=None, help="CSV output path")
    p_match.add_argument("--append", action="store_true", help="append to the CSV instead of overwriting")
    p_match.add_argument("--quiet", action="store_true")
    p_match.set_defaults(func=cmd_match)

    p_bench = sub.add_parser("bench", help="simulations-per-second overhead benchmark")
    p_bench.add_argument("--game", required=True, choices=game_ids())
    p_bench.add_argument("--seconds", type=float, default=30.0)
    p_bench.add_argument("--seed", type=int, default=0)
    _add_agent_args(p_bench, "a", "pnmcts")
    _add_agent_args(p_bench, "b", "mcts")
    p_bench.set_defaults(func=cmd_bench)

    p_sweep = sub.add_parser("sweep", help="run a TOML-configured parameter sweep")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.set_defaults(func=cmd_sweep)

    p_solve = sub.add_parser("solve", help="prove or disprove a forced win with proof-number search")
    p_solve.add_argument("--game", required=True, choices=game_ids())
    p_solve.add_argument("--max-nodes", type=int, default=2**20)
    p_solve.add_argument("--position", default=None,
                         help="moves from the initial position, space- or comma-separated")
    p_solve.set_defaults(func=cmd_solve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
