"""Lines of Action on a configurable N x N board (N >= 4).

Board encoding: one bitboard per player, bit ``y*N + x`` for the square at
file ``x`` (0 = 'a') and rank ``y`` (0 = rank 1).  The first player's pieces
start along the top and bottom rows, the second player's in the left- and
right-most files; corners stay empty.

Movement: a piece moves in a straight line exactly as many squares as there
are pieces of either color anywhere on that full line.  Own pieces may be
jumped; opposing pieces block the path but are captured by landing on them.
A player wins by connecting all own pieces (orthogonally or diagonally).
House rules for cases the classic description leaves open:

* a move that connects both players at once wins for the mover;
* a player with no legal move loses;
* an optional ``max_moves`` cap scores the game as a draw when reached
  (used to make small boards finite for exhaustive solving).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from ..core import ContractViolation, Game, IllegalMoveError, Outcome, Player
from . import _kernels

_OUTCOME_OF_CODE = (None, Outcome.WIN_FIRST, Outcome.WIN_SECOND, Outcome.DRAW)

# Directions in fixed generation order; AXIS maps each to its full line.
DELTAS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
AXIS_OF_DIR = (0, 2, 1, 3, 0, 2, 1, 3)  # 0=E/W, 1=N/S, 2=NE/SW, 3=NW/SE


class LoaMove(NamedTuple):
    src: int
    dst: int


class LoaTables:
    """Precomputed geometry for one board size (lines, rays, path masks)."""

    def __init__(self, n: int):
        if n < 4:
            raise ValueError(f"LOA board must be at least 4x4, got {n}")
        self.n = n
        nsq = n * n
        self.full = (1 << nsq) - 1
        self.not_left = 0
        self.not_right = 0
        for y in range(n):
            for x in range(n):
                sq = y * n + x
                if x > 0:
                    self.not_left |= 1 << sq
                if x < n - 1:
                    self.not_right |= 1 << sq

        self.rays: list[list[tuple[int, ...]]] = []
        self.path_masks: list[list[tuple[int, ...]]] = []
        self.line_masks: list[list[int]] = []
        for sq in range(nsq):
            y, x = divmod(sq, n)
            sq_rays = []
            sq_paths = []
            for dx, dy in DELTAS:
                ray = []
                cx, cy = x + dx, y + dy
                while 0 <= cx < n and 0 <= cy < n:
                    ray.append(cy * n + cx)
                    cx += dx
                    cy += dy
                sq_rays.append(tuple(ray))
                # path_masks[d] = squares strictly between sq and its d-th ray square
                paths = [0]
                mask = 0
                for k in range(len(ray)):
                    paths.append(mask)
                    mask |= 1 << ray[k]
                sq_paths.append(tuple(paths))
            self.rays.append(sq_rays)
            self.path_masks.append(sq_paths)
            lines = [0, 0, 0, 0]
            for d in range(8):
                axis = AXIS_OF_DIR[d]
                for r in sq_rays[d]:
                    lines[axis] |= 1 << r
            self.line_masks.append([ln | (1 << sq) for ln in lines])

        # Flat numpy mirrors of the tables above, consumed by the numba kernels.
        self.np_line_mask = np.array(self.line_masks, dtype=np.uint64)
        self.np_ray_len = np.zeros((nsq, 8), dtype=np.int64)
        self.np_ray_sq = np.zeros((nsq, 8, n), dtype=np.int64)
        self.np_path_mask = np.zeros((nsq, 8, n + 1), dtype=np.uint64)
        for sq in range(nsq):
            for d in range(8):
                ray = self.rays[sq][d]
                self.np_ray_len[sq, d] = len(ray)
                for k, r in enumerate(ray):
                    self.np_ray_sq[sq, d, k] = r
                for dist, mask in enumerate(self.path_masks[sq][d]):
                    self.np_path_mask[sq, d, dist] = mask
        self.np_axis = np.array(AXIS_OF_DIR, dtype=np.int64)
        self.np_not_left = np.uint64(self.not_left)
        self.np_not_right = np.uint64(self.not_right)
        self.np_full = np.uint64(self.full)
        self.np_n = np.uint64(n)


@lru_cache(maxsize=None)
def tables_for(n: int) -> LoaTables:
    return LoaTables(n)


def _neighbors(mask: int, n: int, t: LoaTables) -> int:
    left = mask & t.not_left
    right = mask & t.not_right
    return (
        (right << 1)
        | (left >> 1)
        | (mask << n)
        | (mask >> n)
        | (right << (n + 1))
        | (left >> (n + 1))
        | (left << (n - 1))
        | (right >> (n - 1))
    ) & t.full


def connected_component(pieces: int, n: int, t: LoaTables) -> int:
    """Bitboard of the component containing the lowest set bit of `pieces`."""
    comp = pieces & -pieces
    while True:
        grown = (comp | _neighbors(comp, n, t)) & pieces
        if grown == comp:
            return comp
        comp = grown


def is_connected(pieces: int, n: int, t: LoaTables) -> bool:
    if pieces == 0:
        raise ValueError("connectivity is undefined for an empty piece set")
    return connected_component(pieces, n, t) == pieces


@dataclass(frozen=True, slots=True)
class LoaState:
    n: int
    first: int
    second: int
    to_move: Player
    move_count: int
    outcome: Optional[Outcome]


class LoaGame(Game):
    strictly_alternating = True

    def __init__(self, n: int = 8, max_moves: Optional[int] = None):
        self.n = n
        self.max_moves = max_moves
        self.tables = tables_for(n)
        self.game_id = f"loa{n}"

    # -- setup ----------------------------------------------------------

    def initial_state(self) -> LoaState:
        n = self.n
        first = second = 0
        for x in range(1, n - 1):
            first |= (1 << x) | (1 << ((n - 1) * n + x))
        for y in range(1, n - 1):
            second |= (1 << (y * n)) | (1 << (y * n + n - 1))
        return self._make_state(first, second, Player.FIRST, 0)

    def state_from_pieces(
        self,
        first: list[str],
        second: list[str],
        to_move: Player,
        move_count: int = 0,
    ) -> LoaState:
        """Build a position from square names such as "b1" (tests, CLI)."""
        boards = [0, 0]
        for i, squares in enumerate((first, second)):
            for name in squares:
                bit = 1 << self.parse_square(name)
                if (boards[0] | boards[1]) & bit:
                    raise ValueError(f"square {name} listed twice")
                boards[i] |= bit
        if not boards[0] or not boards[1]:
            raise ValueError("each player needs at least one piece")
        return self._make_state(boards[0], boards[1], to_move, move_count)

    def _make_state(self, first: int, second: int, to_move: Player, move_count: int) -> LoaState:
        outcome = self._evaluate(first, second, to_move)
        if outcome is None and self.max_moves is not None and move_count >= self.max_moves:
            outcome = Outcome.DRAW
        return LoaState(self.n, first, second, to_move, move_count, outcome)

    # -- rules ----------------------------------------------------------

    def legal_moves(self, state: LoaState) -> list[LoaMove]:
        if state.outcome is not None:
            raise ContractViolation(f"legal_moves called on a terminal {self.game_id} state")
        return self._gen_moves(state.first, state.second, state.to_move)

    def _gen_moves(self, first: int, second: int, player: Player) -> list[LoaMove]:
        t = self.tables
        own = first if player is Player.FIRST else second
        opp = second if player is Player.FIRST else first
        occ = first | second
        moves = []
        bb = own
        while bb:
            b = bb & -bb
            bb ^= b
            sq = b.bit_length() - 1
            rays = t.rays[sq]
            paths = t.path_masks[sq]
            lines = t.line_masks[sq]
            for d in range(8):
                dist = (lines[AXIS_OF_DIR[d]] & occ).bit_count()
                ray = rays[d]
                if dist > len(ray):
                    continue
                if paths[d][dist] & opp:
                    continue
                dst = ray[dist - 1]
                if own & (1 << dst):
                    continue
                moves.append(LoaMove(sq, dst))
        return moves

    def apply(self, state: LoaState, move: LoaMove) -> LoaState:
        if state.outcome is not None:
            raise ContractViolation(f"apply called on a terminal {self.game_id} state")
        src, dst = move
        t = self.tables
        own = state.first if state.to_move is Player.FIRST else state.second
        opp = state.second if state.to_move is Player.FIRST else state.first
        if not own & (1 << src):
            raise IllegalMoveError(f"{self.render_move(move)}: no piece of the mover on {self.render_square(src)}")
        d, steps = self._direction_of(src, dst)
        if d is None:
            raise IllegalMoveError(f"{self.render_move(move)}: destination is not on a straight line from the origin")
        dist = (t.line_masks[src][AXIS_OF_DIR[d]] & (state.first | state.second)).bit_count()
        if steps != dist:
            raise IllegalMoveError(
                f"{self.render_move(move)}: must move exactly {dist} squares "
                f"(the piece count on that line), not {steps}"
            )
        if t.path_masks[src][d][dist] & opp:
            raise IllegalMoveError(f"{self.render_move(move)}: an opposing piece blocks the path")
        if own & (1 << dst):
            raise IllegalMoveError(f"{self.render_move(move)}: cannot land on an own piece")
        own = (own ^ (1 << src)) | (1 << dst)
        opp &= ~(1 << dst)
        if opp == 0:
            raise IllegalMoveError(f"{self.render_move(move)}: capture would leave the opponent without pieces")
        if state.to_move is Player.FIRST:
            first, second = own, opp
        else:
            first, second = opp, own
        return self._make_state(first, second, state.to_move.opponent, state.move_count + 1)

    def apply_trusted(self, state: LoaState, move: LoaMove, outcome: Optional[Outcome]) -> LoaState:
        src, dst = move
        own = state.first if state.to_move is Player.FIRST else state.second
        opp = state.second if state.to_move is Player.FIRST else state.first
        own = (own ^ (1 << src)) | (1 << dst)
        opp &= ~(1 << dst)
        if state.to_move is Player.FIRST:
            first, second = own, opp
        else:
            first, second = opp, own
        return LoaState(self.n, first, second, state.to_move.opponent, state.move_count + 1, outcome)

    def _direction_of(self, src: int, dst: int):
        n = self.n
        sy, sx = divmod(src, n)
        dy, dx = divmod(dst, n)
        vx, vy = dx - sx, dy - sy
        if vx == 0 and vy == 0:
            return None, 0
        if vx != 0 and vy != 0 and abs(vx) != abs(vy):
            return None, 0
        steps = max(abs(vx), abs(vy))
        step = (0 if vx == 0 else vx // abs(vx), 0 if vy == 0 else vy // abs(vy))
        return DELTAS.index(step), steps

    def terminal_outcome(self, state: LoaState) -> Optional[Outcome]:
        return state.outcome

    def _evaluate(self, first: int, second: int, to_move: Player) -> Optional[Outcome]:
        """Outcome of a position in which `to_move.opponent` has just moved."""
        n, t = self.n, self.tables
        cf = is_connected(first, n, t)
        cs = is_connected(second, n, t)
        if cf and cs:
            return Outcome.win_for(to_move.opponent)
        if cf:
            return Outcome.WIN_FIRST
        if cs:
            return Outcome.WIN_SECOND
        if not self._has_move(first, second, to_move):
            return Outcome.win_for(to_move.opponent)
        return None

    def _has_move(self, first: int, second: int, player: Player) -> bool:
        t = self.tables
        own = first if player is Player.FIRST else second
        opp = second if player is Player.FIRST else first
        occ = first | second
        bb = own
        while bb:
            b = bb & -bb
            bb ^= b
            sq = b.bit_length() - 1
            rays = t.rays[sq]
            paths = t.path_masks[sq]
            lines = t.line_masks[sq]
            for d in range(8):
                dist = (lines[AXIS_OF_DIR[d]] & occ).bit_count()
                ray = rays[d]
                if dist > len(ray) or paths[d][dist] & opp or own & (1 << ray[dist - 1]):
                    continue
                return True
        return False

    # -- kernel-backed fast paths ------------------------------------------

    def _kernel_args(self, t: LoaTables) -> tuple:
        return (t.np_n, t.np_not_left, t.np_not_right, t.np_full,
                t.np_line_mask, t.np_ray_len, t.np_ray_sq, t.np_path_mask, t.np_axis)

    def random_playout(self, state: LoaState, max_moves: int, seed: int) -> Optional[Outcome]:
        if state.outcome is not None:
            return state.outcome
        code = _kernels.loa_playout(
            np.uint64(state.first), np.uint64(state.second), state.to_move.value,
            max_moves, state.move_count,
            -1 if self.max_moves is None else self.max_moves,
            np.uint64(seed), *self._kernel_args(self.tables),
        )
        return _OUTCOME_OF_CODE[code]

    def child_eval(self, state: LoaState) -> tuple[list, list]:
        if state.outcome is not None:
            raise ContractViolation(f"child_eval called on a terminal {self.game_id} state")
        cap = 8 * self.n * self.n
        src = np.empty(cap, np.int64)
        dst = np.empty(cap, np.int64)
        codes = np.empty(cap, np.int64)
        cnt = _kernels.loa_children(
            np.uint64(state.first), np.uint64(state.second), state.to_move.value,
            state.move_count, -1 if self.max_moves is None else self.max_moves,
            *self._kernel_args(self.tables), src, dst, codes,
        )
        moves = list(zip(src[:cnt].tolist(), dst[:cnt].tolist()))
        outcomes = [_OUTCOME_OF_CODE[c] for c in codes[:cnt].tolist()]
        return moves, outcomes

    # -- spec'd queries ---------------------------------------------------

    def connected(self, state: LoaState, player: Player) -> bool:
        """True iff the player's pieces form one 8-neighbor component."""
        pieces = state.first if player is Player.FIRST else state.second
        return is_connected(pieces, self.n, self.tables)

    def move_distance(self, state: LoaState, square: int, direction: int) -> int:
        """Pieces of either color on the full line through `square` for `direction`."""
        line = self.tables.line_masks[square][AXIS_OF_DIR[direction]]
        return (line & (state.first | state.second)).bit_count()

    # -- notation ---------------------------------------------------------

    def render_square(self, sq: int) -> str:
        y, x = divmod(sq, self.n)
        return f"{chr(ord('a') + x)}{y + 1}"

    def parse_square(self, text: str) -> int:
        x = ord(text[0]) - ord("a")
        y = int(text[1:]) - 1
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"square {text!r} is off the {self.n}x{self.n} board")
        return y * self.n + x

    def render_move(self, move: LoaMove) -> str:
        return f"{self.render_square(move[0])}-{self.render_square(move[1])}"

    def parse_move(self, text: str) -> LoaMove:
        src, _, dst = text.partition("-")
        if not dst:
            raise ValueError(f"LOA move {text!r} must look like 'b1-d3'")
        return LoaMove(self.parse_square(src), self.parse_square(dst))
