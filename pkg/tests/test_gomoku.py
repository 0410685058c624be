from __future__ import annotations

import random

import pytest

from pnmcts.core import ContractViolation, IllegalMoveError, Outcome, Player
from pnmcts.games import GomokuGame

from .support.oracles import gomoku_exact_five_runs


def grid(n, stones):
    """Rows of '.' with the given {(x, y): 'x'|'o'} placements; row 0 = rank 1."""
    rows = [["."] * n for _ in range(n)]
    for (x, y), c in stones.items():
        rows[y][x] = c
    return ["".join(r) for r in rows]


class TestBasics:
    def test_empty_board_has_225_moves(self, gomoku):
        assert len(gomoku.legal_moves(gomoku.initial_state())) == 225

    def test_placement_flips_player_and_occupies(self, gomoku):
        s = gomoku.initial_state()
        center = gomoku.parse_move("h8")
        nxt = gomoku.apply(s, center)
        assert nxt.cells[center] == 1
        assert nxt.to_move is Player.SECOND
        assert gomoku.terminal_outcome(nxt) is None

    def test_occupied_cell_is_illegal(self, gomoku):
        s = gomoku.apply(gomoku.initial_state(), gomoku.parse_move("h8"))
        with pytest.raises(IllegalMoveError, match="occupied"):
            gomoku.apply(s, gomoku.parse_move("h8"))

    def test_notation_round_trip(self, gomoku):
        for text in ("a1", "h8", "o15", "b12"):
            assert gomoku.render_move(gomoku.parse_move(text)) == text


class TestExactFive:
    def test_completing_five_wins(self, gomoku):
        stones = {(x, 7): "x" for x in range(4, 8)}
        stones.update({(x, 3): "o" for x in range(4, 7)})
        s = gomoku.state_from_grid(grid(15, stones), Player.FIRST)
        move = gomoku.parse_move("i8")  # (8, 7) completes d8..h8 -> five
        nxt = gomoku.apply(s, move)
        assert nxt.outcome is Outcome.WIN_FIRST
        assert gomoku.win_created(nxt, move)

    def test_extending_five_to_six_does_not_win(self, gomoku):
        # four stones, a gap, then one more: c8 d8 e8 f8 . h8; playing g8
        # makes a line of six, which does not count
        stones = {(x, 7): "x" for x in (2, 3, 4, 5, 7)}
        stones.update({(x, 0): "o" for x in range(4)})
        s = gomoku.state_from_grid(grid(15, stones), Player.FIRST)
        move = gomoku.parse_move("g8")
        nxt = gomoku.apply(s, move)
        assert nxt.outcome is None
        assert not gomoku.win_created(nxt, move)

    def test_four_in_a_row_does_not_win(self, gomoku):
        stones = {(x, 7): "x" for x in range(4, 7)}
        stones.update({(x, 0): "o" for x in range(3)})
        s = gomoku.state_from_grid(grid(15, stones), Player.FIRST)
        nxt = gomoku.apply(s, gomoku.parse_move("h8"))
        assert nxt.outcome is None

    def test_diagonal_five_wins(self, gomoku):
        stones = {(i, i): "x" for i in range(4)}
        stones.update({(x, 14): "o" for x in range(4)})
        s = gomoku.state_from_grid(grid(15, stones), Player.FIRST)
        nxt = gomoku.apply(s, gomoku.parse_move("e5"))
        assert nxt.outcome is Outcome.WIN_FIRST

    def test_win_check_agrees_with_scanner_on_random_positions(self, gomoku, rng):
        n = gomoku.n
        symbol = {1: "x", 2: "o"}
        for _ in range(1000):
            cells = bytearray(n * n)
            placed = []
            stone = 1
            for _k in range(rng.randrange(8, 60)):
                cell = rng.randrange(n * n)
                if cells[cell] == 0:
                    cells[cell] = stone
                    placed.append((cell, stone))
                    stone = 3 - stone
            rows = [
                "".join(symbol.get(cells[y * n + x], ".") for x in range(n)) for y in range(n)
            ]
            state = gomoku.state_from_grid(rows, Player.FIRST)
            runs = gomoku_exact_five_runs(bytes(cells), n)
            for cell, st in placed:
                in_run = any(st == run_stone and cell in run_cells for run_stone, run_cells in runs)
                assert gomoku.win_created(state, cell) == in_run


class TestDraw:
    # 6x6 keeps the fixtures small; the rule is size-free.  The pattern is
    # validated against the line-scanner oracle inside each test, so a stray
    # five in the fixture would fail loudly.
    FULL = ["xxooxx", "xxooxx", "ooxxoo", "ooxxoo", "xxooxx", "xxooxx"]

    def test_full_board_without_five_is_a_draw(self):
        g = GomokuGame(6)
        s = g.state_from_grid(self.FULL, Player.FIRST)
        assert gomoku_exact_five_runs(s.cells, 6) == []
        assert g.terminal_outcome(s) is Outcome.DRAW

    def test_near_full_board_draw_via_apply(self):
        g = GomokuGame(6)
        rows = self.FULL[:5] + ["xxoox."]
        s = g.state_from_grid(rows, Player.FIRST)
        assert g.terminal_outcome(s) is None
        nxt = g.apply(s, g.parse_move("f6"))
        assert gomoku_exact_five_runs(nxt.cells, 6) == []
        assert g.terminal_outcome(nxt) is Outcome.DRAW

    def test_legal_moves_on_terminal_raises(self, gomoku):
        stones = {(x, 7): "x" for x in range(4, 9)}
        s = gomoku.state_from_grid(grid(15, stones), Player.SECOND)
        assert gomoku.terminal_outcome(s) is Outcome.WIN_FIRST
        with pytest.raises(ContractViolation):
            gomoku.legal_moves(s)
