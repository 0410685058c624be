"""Gomoku: five in a row on a 15 x 15 board, exact-five rule.

A placement wins only if the placed stone sits in a maximal line (orthogonal
or diagonal) of exactly five own stones; overlines of six or more do not
count.  A full board without a winning line is a draw.

Cells are encoded in a flat ``bytes`` string (0 empty, 1 first, 2 second),
row-major with cell ``y*N + x``; moves are flat cell indices with notation
column letter + row number ("h8").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import ContractViolation, Game, IllegalMoveError, Outcome, Player
from . import _kernels

_LINE_DIRS = ((1, 0), (0, 1), (1, 1), (1, -1))
_OUTCOME_OF_CODE = (None, Outcome.WIN_FIRST, Outcome.WIN_SECOND, Outcome.DRAW)


@dataclass(frozen=True, slots=True)
class GomokuState:
    n: int
    cells: bytes
    to_move: Player
    move_count: int
    outcome: Optional[Outcome]
    last_move: int  # flat index of the previous placement, -1 before any move


class GomokuGame(Game):
    strictly_alternating = True

    def __init__(self, n: int = 15):
        if n < 5:
            raise ValueError("board must be at least 5x5 for five in a row")
        self.n = n
        self.game_id = "gomoku" if n == 15 else f"gomoku{n}"

    def initial_state(self) -> GomokuState:
        return GomokuState(self.n, bytes(self.n * self.n), Player.FIRST, 0, None, -1)

    def state_from_grid(self, rows: list[str], to_move: Player, move_count: Optional[int] = None) -> GomokuState:
        """Build a position from strings of '.', 'x' (first), 'o' (second).

        ``rows[0]`` is rank 1.  The whole board is scanned for an existing
        maximal exact-five, so hand-built winning or drawn positions get the
        right outcome; positions built through `apply` never need this scan.
        """
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"expected {self.n} rows of {self.n} cells")
        lookup = {".": 0, "x": 1, "o": 2}
        cells = bytes(lookup[c] for row in rows for c in row)
        stones = sum(1 for c in cells if c)
        outcome: Optional[Outcome] = None
        winner_stone = self._scan_win(cells)
        if winner_stone:
            outcome = Outcome.WIN_FIRST if winner_stone == 1 else Outcome.WIN_SECOND
        elif stones == self.n * self.n:
            outcome = Outcome.DRAW
        return GomokuState(
            self.n, cells, to_move, move_count if move_count is not None else stones, outcome, -1
        )

    def _scan_win(self, cells: bytes) -> int:
        """Stone code of a player owning a maximal exact-five anywhere, else 0."""
        for i, stone in enumerate(cells):
            if stone and self._wins(cells, i, stone):
                return stone
        return 0

    def legal_moves(self, state: GomokuState) -> list[int]:
        if state.outcome is not None:
            raise ContractViolation(f"legal_moves called on a terminal {self.game_id} state")
        return [i for i, c in enumerate(state.cells) if c == 0]

    def apply(self, state: GomokuState, move: int) -> GomokuState:
        if state.outcome is not None:
            raise ContractViolation(f"apply called on a terminal {self.game_id} state")
        nsq = self.n * self.n
        if not isinstance(move, int) or not 0 <= move < nsq:
            raise IllegalMoveError(f"cell {move!r} is off the {self.n}x{self.n} board")
        if state.cells[move] != 0:
            raise IllegalMoveError(f"cell {self.render_move(move)} is already occupied")
        cells = bytearray(state.cells)
        stone = 1 if state.to_move is Player.FIRST else 2
        cells[move] = stone
        cells = bytes(cells)
        outcome: Optional[Outcome] = None
        if self._wins(cells, move, stone):
            outcome = Outcome.win_for(state.to_move)
        elif state.move_count + 1 == nsq:
            outcome = Outcome.DRAW
        return GomokuState(self.n, cells, state.to_move.opponent, state.move_count + 1, outcome, move)

    def _wins(self, cells: bytes, move: int, stone: int) -> bool:
        n = self.n
        y, x = divmod(move, n)
        for dx, dy in _LINE_DIRS:
            run = 1
            cx, cy = x + dx, y + dy
            while 0 <= cx < n and 0 <= cy < n and cells[cy * n + cx] == stone:
                run += 1
                cx += dx
                cy += dy
            cx, cy = x - dx, y - dy
            while 0 <= cx < n and 0 <= cy < n and cells[cy * n + cx] == stone:
                run += 1
                cx -= dx
                cy -= dy
            if run == 5:
                return True
        return False

    def win_created(self, state: GomokuState, last_move: int) -> bool:
        """True iff the stone at `last_move` completes a maximal line of exactly 5."""
        stone = state.cells[last_move]
        if stone == 0:
            raise ValueError(f"cell {self.render_move(last_move)} is empty")
        return self._wins(state.cells, last_move, stone)

    def terminal_outcome(self, state: GomokuState) -> Optional[Outcome]:
        return state.outcome

    def apply_trusted(self, state: GomokuState, move: int, outcome: Optional[Outcome]) -> GomokuState:
        cells = bytearray(state.cells)
        cells[move] = 1 if state.to_move is Player.FIRST else 2
        return GomokuState(
            self.n, bytes(cells), state.to_move.opponent, state.move_count + 1, outcome, move
        )

    def random_playout(self, state: GomokuState, max_moves: int, seed: int) -> Optional[Outcome]:
        if state.outcome is not None:
            return state.outcome
        scratch = np.frombuffer(state.cells, dtype=np.uint8).copy()
        code = _kernels.gomoku_playout(scratch, state.to_move.value, max_moves, np.uint64(seed), self.n)
        return _OUTCOME_OF_CODE[code]

    def child_eval(self, state: GomokuState) -> tuple[list, list]:
        if state.outcome is not None:
            raise ContractViolation(f"child_eval called on a terminal {self.game_id} state")
        scratch = np.frombuffer(state.cells, dtype=np.uint8).copy()
        nsq = self.n * self.n
        moves = np.empty(nsq, np.int64)
        codes = np.empty(nsq, np.int64)
        cnt = _kernels.gomoku_children(scratch, state.to_move.value, self.n, moves, codes)
        return moves[:cnt].tolist(), [_OUTCOME_OF_CODE[c] for c in codes[:cnt].tolist()]

    def render_move(self, move: int) -> str:
        y, x = divmod(move, self.n)
        return f"{chr(ord('a') + x)}{y + 1}"

    def parse_move(self, text: str) -> int:
        x = ord(text[0]) - ord("a")
        y = int(text[1:]) - 1
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"cell {text!r} is off the {self.n}x{self.n} board")
        return y * self.n + x
