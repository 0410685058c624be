"""Knightthrough: a Breakthrough variant with forward-only knight moves.

8 x 8 board, 16 pieces per player filling their first two rows.  Each piece
moves like a chess knight restricted to its four forward destinations (rank
strictly increasing for the mover), jumping over anything and capturing by
landing on an opposing piece.  Reaching the opponent's edge or capturing all
opposing pieces wins; a player with no legal move loses (the race cannot
continue for them).

Bitboards mirror the LOA encoding: bit ``y*8 + x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from ..core import ContractViolation, Game, IllegalMoveError, Outcome, Player
from . import _kernels

N = 8
FULL = (1 << 64) - 1
_OFFSETS = ((1, 2), (-1, 2), (2, 1), (-2, 1))  # forward for FIRST; mirrored for SECOND
_OUTCOME_OF_CODE = (None, Outcome.WIN_FIRST, Outcome.WIN_SECOND, Outcome.DRAW)


class KtMove(NamedTuple):
    src: int
    dst: int


def _build_dests() -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    per_player = []
    for player_sign in (1, -1):
        table = []
        for sq in range(64):
            y, x = divmod(sq, N)
            dests = []
            for dx, dy in _OFFSETS:
                cx, cy = x + dx, y + dy * player_sign
                if 0 <= cx < N and 0 <= cy < N:
                    dests.append(cy * N + cx)
            table.append(tuple(dests))
        per_player.append(tuple(table))
    return per_player[0], per_player[1]


DESTS_FIRST, DESTS_SECOND = _build_dests()
_LAST_RANK_FIRST = ((1 << N) - 1) << (N * (N - 1))
_LAST_RANK_SECOND = (1 << N) - 1


def _np_dests(table: tuple[tuple[int, ...], ...]) -> tuple[np.ndarray, np.ndarray]:
    dests = np.zeros((64, 4), dtype=np.int64)
    ndests = np.zeros(64, dtype=np.int64)
    for sq, ds in enumerate(table):
        ndests[sq] = len(ds)
        for j, d in enumerate(ds):
            dests[sq, j] = d
    return dests, ndests


_NP_DESTS_FIRST, _NP_NDESTS_FIRST = _np_dests(DESTS_FIRST)
_NP_DESTS_SECOND, _NP_NDESTS_SECOND = _np_dests(DESTS_SECOND)


@dataclass(frozen=True, slots=True)
class KtState:
    first: int
    second: int
    to_move: Player
    move_count: int
    outcome: Optional[Outcome]


class KnightthroughGame(Game):
    game_id = "knightthrough"
    strictly_alternating = True

    def initial_state(self) -> KtState:
        first = (1 << (2 * N)) - 1
        second = first << (N * (N - 2))
        return self._make_state(first, second, Player.FIRST, 0)

    def state_from_pieces(
        self, first: list[str], second: list[str], to_move: Player, move_count: int = 0
    ) -> KtState:
        boards = [0, 0]
        for i, squares in enumerate((first, second)):
            for name in squares:
                bit = 1 << self.parse_square(name)
                if (boards[0] | boards[1]) & bit:
                    raise ValueError(f"square {name} listed twice")
                boards[i] |= bit
        return self._make_state(boards[0], boards[1], to_move, move_count)

    def _make_state(self, first: int, second: int, to_move: Player, move_count: int) -> KtState:
        return KtState(first, second, to_move, move_count, self._evaluate(first, second, to_move))

    def _evaluate(self, first: int, second: int, to_move: Player) -> Optional[Outcome]:
        # The mover's goals are checked first so that (unreachable) positions
        # where both players sit on their target rank resolve to the last mover.
        mover = to_move.opponent
        checks = (
            (Outcome.WIN_FIRST, first & _LAST_RANK_FIRST or second == 0),
            (Outcome.WIN_SECOND, second & _LAST_RANK_SECOND or first == 0),
        )
        if mover is Player.SECOND:
            checks = (checks[1], checks[0])
        for outcome, reached in checks:
            if reached:
                return outcome
        if not self._has_move(first, second, to_move):
            return Outcome.win_for(mover)
        return None

    def _moves_for(self, first: int, second: int, player: Player) -> list[KtMove]:
        own = first if player is Player.FIRST else second
        dests = DESTS_FIRST if player is Player.FIRST else DESTS_SECOND
        moves = []
        bb = own
        while bb:
            b = bb & -bb
            bb ^= b
            sq = b.bit_length() - 1
            for dst in dests[sq]:
                if not own & (1 << dst):
                    moves.append(KtMove(sq, dst))
        return moves

    def _has_move(self, first: int, second: int, player: Player) -> bool:
        own = first if player is Player.FIRST else second
        dests = DESTS_FIRST if player is Player.FIRST else DESTS_SECOND
        bb = own
        while bb:
            b = bb & -bb
            bb ^= b
            sq = b.bit_length() - 1
            for dst in dests[sq]:
                if not own & (1 << dst):
                    return True
        return False

    def legal_moves(self, state: KtState) -> list[KtMove]:
        if state.outcome is not None:
            raise ContractViolation(f"legal_moves called on a terminal {self.game_id} state")
        return self._moves_for(state.first, state.second, state.to_move)

    def apply(self, state: KtState, move: KtMove) -> KtState:
        if state.outcome is not None:
            raise ContractViolation(f"apply called on a terminal {self.game_id} state")
        src, dst = move
        own = state.first if state.to_move is Player.FIRST else state.second
        opp = state.second if state.to_move is Player.FIRST else state.first
        dests = DESTS_FIRST if state.to_move is Player.FIRST else DESTS_SECOND
        if not own & (1 << src):
            raise IllegalMoveError(f"{self.render_move(move)}: no piece of the mover on {self.render_square(src)}")
        if dst not in dests[src]:
            raise IllegalMoveError(f"{self.render_move(move)}: not a forward knight move")
        if own & (1 << dst):
            raise IllegalMoveError(f"{self.render_move(move)}: cannot land on an own piece")
        own = (own ^ (1 << src)) | (1 << dst)
        opp &= ~(1 << dst)
        if state.to_move is Player.FIRST:
            first, second = own, opp
        else:
            first, second = opp, own
        return self._make_state(first, second, state.to_move.opponent, state.move_count + 1)

    def terminal_outcome(self, state: KtState) -> Optional[Outcome]:
        return state.outcome

    def apply_trusted(self, state: KtState, move: KtMove, outcome: Optional[Outcome]) -> KtState:
        src, dst = move
        own = state.first if state.to_move is Player.FIRST else state.second
        opp = state.second if state.to_move is Player.FIRST else state.first
        own = (own ^ (1 << src)) | (1 << dst)
        opp &= ~(1 << dst)
        if state.to_move is Player.FIRST:
            first, second = own, opp
        else:
            first, second = opp, own
        return KtState(first, second, state.to_move.opponent, state.move_count + 1, outcome)

    def random_playout(self, state: KtState, max_moves: int, seed: int) -> Optional[Outcome]:
        if state.outcome is not None:
            return state.outcome
        code = _kernels.kt_playout(
            np.uint64(state.first), np.uint64(state.second), state.to_move.value,
            max_moves, np.uint64(seed),
            _NP_DESTS_FIRST, _NP_NDESTS_FIRST, _NP_DESTS_SECOND, _NP_NDESTS_SECOND,
        )
        return _OUTCOME_OF_CODE[code]

    def child_eval(self, state: KtState) -> tuple[list, list]:
        if state.outcome is not None:
            raise ContractViolation(f"child_eval called on a terminal {self.game_id} state")
        src = np.empty(260, np.int64)
        dst = np.empty(260, np.int64)
        codes = np.empty(260, np.int64)
        cnt = _kernels.kt_children(
            np.uint64(state.first), np.uint64(state.second), state.to_move.value,
            _NP_DESTS_FIRST, _NP_NDESTS_FIRST, _NP_DESTS_SECOND, _NP_NDESTS_SECOND,
            src, dst, codes,
        )
        moves = list(zip(src[:cnt].tolist(), dst[:cnt].tolist()))
        outcomes = [_OUTCOME_OF_CODE[c] for c in codes[:cnt].tolist()]
        return moves, outcomes

    def render_square(self, sq: int) -> str:
        y, x = divmod(sq, N)
        return f"{chr(ord('a') + x)}{y + 1}"

    def parse_square(self, text: str) -> int:
        x = ord(text[0]) - ord("a")
        y = int(text[1:]) - 1
        if not (0 <= x < N and 0 <= y < N):
            raise ValueError(f"square {text!r} is off the board")
        return y * N + x

    def render_move(self, move: KtMove) -> str:
        return f"{self.render_square(move[0])}-{self.render_square(move[1])}"

    def parse_move(self, text: str) -> KtMove:
        src, _, dst = text.partition("-")
        if not dst:
            raise ValueError(f"Knightthrough move {text!r} must look like 'b1-c3'")
        return KtMove(self.parse_square(src), self.parse_square(dst))
