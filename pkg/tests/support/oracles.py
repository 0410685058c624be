"""Independent oracles the tests trust instead of the code under test.

Everything here is written from first principles against the rules text,
deliberately avoiding the package's bitboards, kernels, and search helpers:
coordinate sets instead of bitmasks, full-tree negamax instead of any
best-first machinery, run-length line scans instead of incremental checks.
Slow is fine; these only run in tests.
"""

from __future__ import annotations

import random
from collections import deque

from pnmcts.core import Game, Outcome, Player


# ----------------------------------------------------------------------
# Exhaustive negamax over a (finite) game tree
# ----------------------------------------------------------------------


def negamax_value(game: Game, state, memo=None) -> int:
    """Exact game value in {-1, 0, +1} from the perspective of the player to
    move, by exhaustive recursion with transposition memoisation.

    A branch stops early once a value of +1 is found: the maximum is already
    attained, so the result is still exact.  The game must be finite (use the
    small boards' ``max_moves`` draw cap).
    """
    if memo is None:
        memo = {}
    cached = memo.get(state)
    if cached is not None:
        return cached
    outcome = game.terminal_outcome(state)
    if outcome is not None:
        return outcome.reward_for(state.to_move)
    best = -1
    for move in game.legal_moves(state):
        value = -negamax_value(game, game.apply(state, move), memo)
        if value > best:
            best = value
            if best == 1:
                break
    memo[state] = best
    return best


def negamax_best_moves(game: Game, state, memo=None) -> tuple[int, list]:
    """(value, all moves attaining it) for the player to move."""
    if memo is None:
        memo = {}
    best = -2
    winners = []
    for move in game.legal_moves(state):
        value = -negamax_value(game, game.apply(state, move), memo)
        if value > best:
            best = value
            winners = [move]
        elif value == best:
            winners.append(move)
    return best, winners


# ----------------------------------------------------------------------
# LOA connectivity on coordinate sets
# ----------------------------------------------------------------------


def loa_connected_bfs(squares: set[tuple[int, int]]) -> bool:
    """Breadth-first flood fill over (x, y) coordinates, 8-neighborhood."""
    if not squares:
        raise ValueError("empty piece set")
    start = next(iter(squares))
    seen = {start}
    frontier = deque([start])
    while frontier:
        x, y = frontier.popleft()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if dx == 0 and dy == 0:
                    continue
                nb = (x + dx, y + dy)
                if nb in squares and nb not in seen:
                    seen.add(nb)
                    frontier.append(nb)
    return seen == squares


def loa_piece_coords(state, player: Player) -> set[tuple[int, int]]:
    bits = state.first if player is Player.FIRST else state.second
    coords = set()
    sq = 0
    while bits:
        if bits & 1:
            coords.add((sq % state.n, sq // state.n))
        bits >>= 1
        sq += 1
    return coords


def loa_moves_by_scan(state) -> set[tuple[int, int]]:
    """LOA move generation straight from the rules text, on coordinates.

    For every own piece and every one of the 8 directions, count pieces of
    either color on the full line, walk that many steps, and check the
    jumping and landing constraints square by square.
    """
    n = state.n
    own = loa_piece_coords(state, state.to_move)
    opp = loa_piece_coords(state, state.to_move.opponent)
    occupied = own | opp
    moves = set()
    for (x, y) in own:
        for dx, dy in ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)):
            count = 1  # the moving piece itself
            cx, cy = x + dx, y + dy
            while 0 <= cx < n and 0 <= cy < n:
                if (cx, cy) in occupied:
                    count += 1
                cx += dx
                cy += dy
            cx, cy = x - dx, y - dy
            while 0 <= cx < n and 0 <= cy < n:
                if (cx, cy) in occupied:
                    count += 1
                cx -= dx
                cy -= dy
            tx, ty = x + dx * count, y + dy * count
            if not (0 <= tx < n and 0 <= ty < n):
                continue
            blocked = any(
                (x + dx * k, y + dy * k) in opp for k in range(1, count)
            )
            if blocked or (tx, ty) in own:
                continue
            moves.add((y * n + x, ty * n + tx))
    return moves


# ----------------------------------------------------------------------
# Gomoku exhaustive line scanner
# ----------------------------------------------------------------------


def gomoku_exact_five_runs(cells: bytes, n: int) -> list[tuple[int, set[int]]]:
    """All maximal runs of exactly five equal stones, as (stone, cell set).

    Scans every horizontal, vertical, and diagonal line with run-length
    encoding; a run qualifies only if the cells just before and after it are
    off-board or of a different color.
    """
    lines = []
    for y in range(n):
        lines.append([(x, y) for x in range(n)])
    for x in range(n):
        lines.append([(x, y) for y in range(n)])
    for s in range(2 * n - 1):  # x - y = const and x + y = const diagonals
        lines.append([(x, x - (s - n + 1)) for x in range(n) if 0 <= x - (s - n + 1) < n])
        lines.append([(x, s - x) for x in range(n) if 0 <= s - x < n])
    runs = []
    for line in lines:
        if len(line) < 5:
            continue
        i = 0
        while i < len(line):
            x, y = line[i]
            stone = cells[y * n + x]
            j = i
            while j < len(line):
                xx, yy = line[j]
                if cells[yy * n + xx] != stone:
                    break
                j += 1
            if stone != 0 and j - i == 5:
                runs.append((stone, {yy * n + xx for (xx, yy) in line[i:j]}))
            i = j
    return runs


# ----------------------------------------------------------------------
# Most-proving descent re-derivation
# ----------------------------------------------------------------------


def recompute_proof_numbers(node, goal_player: Player):
    """(pn, dpn) of a solver tree node, recomputed from scratch leaves-up."""
    from pnmcts.search.proof import INF

    if node.children is None:
        if node.outcome is None:
            return (1.0, 1.0)
        return (0.0, INF) if node.outcome.winner is goal_player else (INF, 0.0)
    pairs = [recompute_proof_numbers(c, goal_player) for c in node.children]
    if node.to_move is goal_player:
        return (min(p for p, _ in pairs), sum(d for _, d in pairs))
    return (sum(p for p, _ in pairs), min(d for _, d in pairs))


def enumerate_descent_path(node, goal_player: Player) -> list:
    """The root-to-leaf path the min-pn/min-dpn, first-on-tie rule implies,
    derived from scratch-recomputed proof numbers at every step."""
    path = [node]
    while node.children is not None:
        pairs = [recompute_proof_numbers(c, goal_player) for c in node.children]
        use_pn = node.to_move is goal_player
        keys = [p if use_pn else d for (p, d) in pairs]
        node = node.children[keys.index(min(keys))]
        path.append(node)
    return path


# ----------------------------------------------------------------------
# Random reachable positions
# ----------------------------------------------------------------------


def random_position(game: Game, plies: int, rng: random.Random):
    """A state reached by up to `plies` uniform-random moves (fewer if the
    game ends first, in which case the last non-terminal state is returned)."""
    state = game.initial_state()
    for _ in range(plies):
        if game.terminal_outcome(state) is not None:
            break
        moves = game.legal_moves(state)
        nxt = game.apply(state, moves[rng.randrange(len(moves))])
        if game.terminal_outcome(nxt) is not None:
            return state
        state = nxt
    return state
