"""Awari (a Mancala sowing game) on a 2 x H board, H = 6 by default.

Hole layout: global indices 0..H-1 are the first player's row in sowing
order, H..2H-1 the second player's.  Sowing goes counter-clockwise through
the 2H-hole circuit, one counter per hole, with no skip-origin rule.  If the
last counter lands in the opponent's row and brings that hole to 2 or 3, the
counters there are captured, chaining backwards through contiguous preceding
opponent holes that also hold 2 or 3.

The game ends when no hole holds more than one counter; whoever has captured
more wins, equal captures draw.  A player whose row is empty at the start of
their turn cannot move: the remaining board counters go to the opponent and
the game is scored.  Grand-slam and must-feed rules are deliberately absent.
``initial_counters`` and ``holes_per_row`` are configurable so small variants
stay exhaustively solvable; an optional ``max_moves`` cap scores a draw.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import ContractViolation, Game, IllegalMoveError, Outcome, Player
from . import _kernels

_OUTCOME_OF_CODE = (None, Outcome.WIN_FIRST, Outcome.WIN_SECOND, Outcome.DRAW)


@dataclass(frozen=True, slots=True)
class AwariState:
    holes: tuple[int, ...]
    captured_first: int
    captured_second: int
    to_move: Player
    move_count: int
    outcome: Optional[Outcome]


class AwariGame(Game):
    strictly_alternating = True

    def __init__(
        self,
        holes_per_row: int = 6,
        initial_counters: int = 4,
        max_moves: Optional[int] = None,
    ):
        if holes_per_row < 1 or initial_counters < 1:
            raise ValueError("need at least one hole per row and one counter per hole")
        self.h = holes_per_row
        self.initial_counters = initial_counters
        self.max_moves = max_moves
        self.total_counters = 2 * holes_per_row * initial_counters
        self.game_id = "awari" if (holes_per_row, initial_counters) == (6, 4) else (
            f"awari{holes_per_row}x{initial_counters}"
        )

    def initial_state(self) -> AwariState:
        holes = (self.initial_counters,) * (2 * self.h)
        return self._make_state(holes, 0, 0, Player.FIRST, 0)

    def state_from_holes(
        self,
        holes: list[int],
        captured_first: int,
        captured_second: int,
        to_move: Player,
        move_count: int = 0,
    ) -> AwariState:
        if len(holes) != 2 * self.h or any(c < 0 for c in holes):
            raise ValueError(f"expected {2 * self.h} nonnegative hole counts")
        if sum(holes) + captured_first + captured_second != self.total_counters:
            raise ValueError(f"counters must total {self.total_counters}")
        return self._make_state(tuple(holes), captured_first, captured_second, to_move, move_count)

    def _make_state(self, holes, cap_f, cap_s, to_move, move_count) -> AwariState:
        outcome = self._evaluate(holes, cap_f, cap_s, to_move)
        if outcome is None and self.max_moves is not None and move_count >= self.max_moves:
            outcome = Outcome.DRAW
        return AwariState(holes, cap_f, cap_s, to_move, move_count, outcome)

    def _row(self, player: Player) -> range:
        return range(0, self.h) if player is Player.FIRST else range(self.h, 2 * self.h)

    def _evaluate(self, holes, cap_f, cap_s, to_move) -> Optional[Outcome]:
        if all(c <= 1 for c in holes):
            return self._score(cap_f, cap_s)
        if all(holes[g] == 0 for g in self._row(to_move)):
            # No move available: the rest of the board goes to the mover's opponent,
            # i.e. the player who just moved.
            rest = sum(holes)
            if to_move is Player.FIRST:
                cap_s += rest
            else:
                cap_f += rest
            return self._score(cap_f, cap_s)
        return None

    @staticmethod
    def _score(cap_f: int, cap_s: int) -> Outcome:
        if cap_f > cap_s:
            return Outcome.WIN_FIRST
        if cap_s > cap_f:
            return Outcome.WIN_SECOND
        return Outcome.DRAW

    def legal_moves(self, state: AwariState) -> list[int]:
        if state.outcome is not None:
            raise ContractViolation(f"legal_moves called on a terminal {self.game_id} state")
        base = 0 if state.to_move is Player.FIRST else self.h
        return [i for i in range(self.h) if state.holes[base + i] > 0]

    def apply(self, state: AwariState, move: int) -> AwariState:
        if state.outcome is not None:
            raise ContractViolation(f"apply called on a terminal {self.game_id} state")
        if not isinstance(move, int) or not 0 <= move < self.h:
            raise IllegalMoveError(f"hole index {move!r} is outside the mover's row (0..{self.h - 1})")
        base = 0 if state.to_move is Player.FIRST else self.h
        origin = base + move
        holes = list(state.holes)
        counters = holes[origin]
        if counters == 0:
            raise IllegalMoveError(f"hole {move + 1} is empty and cannot be sown")
        holes[origin] = 0
        g = origin
        for _ in range(counters):
            g = (g + 1) % (2 * self.h)
            holes[g] += 1
        cap_f, cap_s = state.captured_first, state.captured_second
        opp_row = self._row(state.to_move.opponent)
        captured = 0
        while g in opp_row and holes[g] in (2, 3):
            captured += holes[g]
            holes[g] = 0
            g = (g - 1) % (2 * self.h)
        if state.to_move is Player.FIRST:
            cap_f += captured
        else:
            cap_s += captured
        return self._make_state(tuple(holes), cap_f, cap_s, state.to_move.opponent, state.move_count + 1)

    def terminal_outcome(self, state: AwariState) -> Optional[Outcome]:
        return state.outcome

    def apply_trusted(self, state: AwariState, move: int, outcome: Optional[Outcome]) -> AwariState:
        base = 0 if state.to_move is Player.FIRST else self.h
        origin = base + move
        holes = list(state.holes)
        counters = holes[origin]
        holes[origin] = 0
        g = origin
        for _ in range(counters):
            g = (g + 1) % (2 * self.h)
            holes[g] += 1
        cap_f, cap_s = state.captured_first, state.captured_second
        opp_row = self._row(state.to_move.opponent)
        captured = 0
        while g in opp_row and holes[g] in (2, 3):
            captured += holes[g]
            holes[g] = 0
            g = (g - 1) % (2 * self.h)
        if state.to_move is Player.FIRST:
            cap_f += captured
        else:
            cap_s += captured
        return AwariState(
            tuple(holes), cap_f, cap_s, state.to_move.opponent, state.move_count + 1, outcome
        )

    def random_playout(self, state: AwariState, max_moves: int, seed: int) -> Optional[Outcome]:
        if state.outcome is not None:
            return state.outcome
        scratch = np.array(state.holes, dtype=np.int64)
        code = _kernels.awari_playout(
            scratch, state.captured_first, state.captured_second, state.to_move.value,
            self.h, max_moves, state.move_count,
            -1 if self.max_moves is None else self.max_moves, np.uint64(seed),
        )
        return _OUTCOME_OF_CODE[code]

    def child_eval(self, state: AwariState) -> tuple[list, list]:
        if state.outcome is not None:
            raise ContractViolation(f"child_eval called on a terminal {self.game_id} state")
        holes = np.array(state.holes, dtype=np.int64)
        moves = np.empty(self.h, np.int64)
        codes = np.empty(self.h, np.int64)
        cnt = _kernels.awari_children(
            holes, state.captured_first, state.captured_second, state.to_move.value,
            self.h, state.move_count,
            -1 if self.max_moves is None else self.max_moves, moves, codes,
        )
        return moves[:cnt].tolist(), [_OUTCOME_OF_CODE[c] for c in codes[:cnt].tolist()]

    def render_move(self, move: int) -> str:
        return str(move + 1)

    def parse_move(self, text: str) -> int:
        hole = int(text)
        if not 1 <= hole <= self.h:
            raise ValueError(f"Awari hole must be 1..{self.h}, got {text!r}")
        return hole - 1
