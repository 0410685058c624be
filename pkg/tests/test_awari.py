from __future__ import annotations

import random

import pytest

from pnmcts.core import ContractViolation, IllegalMoveError, Outcome, Player
from pnmcts.games import AwariGame


class TestSetup:
    def test_initial_board(self, awari):
        s = awari.initial_state()
        assert s.holes == (4,) * 12
        assert (s.captured_first, s.captured_second) == (0, 0)
        assert awari.legal_moves(s) == [0, 1, 2, 3, 4, 5]

    def test_counter_total_is_constant_metadata(self, awari):
        assert awari.total_counters == 48


class TestSowing:
    def test_four_counters_fill_the_next_four_holes(self, awari):
        s = awari.initial_state()
        nxt = awari.apply(s, 0)
        assert nxt.holes == (0, 5, 5, 5, 5, 4, 4, 4, 4, 4, 4, 4)
        assert nxt.to_move is Player.SECOND

    def test_sow_wraps_counter_clockwise_through_opponent_row(self, awari):
        s = awari.state_from_holes([0, 0, 0, 0, 0, 8, 4, 4, 4, 4, 4, 4],
                                   captured_first=8, captured_second=8, to_move=Player.FIRST)
        nxt = awari.apply(s, 5)
        # 8 counters from hole 6 (global 5): fill all six opponent holes,
        # then wrap into the mover's own holes 1 and 2
        assert nxt.holes[6:] == (5, 5, 5, 5, 5, 5)
        assert nxt.holes[:6] == (1, 1, 0, 0, 0, 0)

    def test_empty_hole_is_illegal(self, awari):
        s = awari.apply(awari.initial_state(), 0)
        s2 = awari.apply(s, 0)
        with pytest.raises(IllegalMoveError, match="empty"):
            awari.apply(s2, 0)  # FIRST's hole 1 was emptied on move 1

    def test_out_of_range_hole_is_illegal(self, awari):
        with pytest.raises(IllegalMoveError):
            awari.apply(awari.initial_state(), 6)


class TestCaptures:
    def test_last_counter_making_two_is_captured(self, awari):
        holes = [0, 0, 0, 0, 0, 1, 1, 4, 4, 4, 4, 4]
        s = awari.state_from_holes(holes, 14, 12, Player.FIRST)
        nxt = awari.apply(s, 5)
        assert nxt.captured_first == 16
        assert nxt.holes[6] == 0

    def test_landing_in_own_row_never_captures(self, awari):
        holes = [1, 1, 0, 0, 0, 0, 4, 4, 4, 4, 4, 4]
        s = awari.state_from_holes(holes, 22, 0, Player.FIRST)
        nxt = awari.apply(s, 0)
        assert nxt.captured_first == 22
        assert nxt.holes[1] == 2

    def test_making_four_does_not_capture(self, awari):
        holes = [0, 0, 0, 0, 0, 1, 3, 4, 4, 4, 4, 4]
        s = awari.state_from_holes(holes, 12, 12, Player.FIRST)
        nxt = awari.apply(s, 5)
        assert nxt.captured_first == 12
        assert nxt.holes[6] == 4

    def test_capture_chains_backwards_through_twos_and_threes(self, awari):
        holes = [0, 0, 0, 1, 0, 3, 1, 2, 2, 4, 4, 4]
        s = awari.state_from_holes(holes, 14, 13, Player.FIRST)
        # sow 3 from hole 6 (global 5): holes 7, 8, 9 become 2, 3, 3 and all
        # three are captured by the backwards chain
        nxt = awari.apply(s, 5)
        assert nxt.captured_first == 14 + 8
        assert nxt.holes[6:9] == (0, 0, 0)

    def test_chain_stops_at_the_row_boundary(self, awari):
        holes = [2, 2, 0, 0, 0, 1, 1, 4, 4, 2, 2, 3]
        s = awari.state_from_holes(holes, 14, 13, Player.FIRST)
        # capture at global hole 6 only; the mover's own holes 1-2 hold 2s
        # but sit across the boundary and stay untouched
        nxt = awari.apply(s, 5)
        assert nxt.captured_first == 16
        assert nxt.holes[0] == 2 and nxt.holes[1] == 2


class TestEndOfGame:
    def test_all_holes_at_most_one_ends_the_game(self, awari):
        holes = [0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1]
        s = awari.state_from_holes(holes, 23, 22, Player.FIRST)
        assert awari.terminal_outcome(s) is None
        nxt = awari.apply(s, 5)  # splits the 2 into two singles: board all <= 1
        assert nxt.outcome is Outcome.WIN_FIRST  # 23 vs 22 on captures

    def test_draw_when_captures_equal(self, awari):
        holes = [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]
        s = awari.state_from_holes(holes, 23, 23, Player.FIRST)
        assert awari.terminal_outcome(s) is Outcome.DRAW

    def test_higher_captures_win(self, awari):
        holes = [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]
        s = awari.state_from_holes(holes, 30, 16, Player.FIRST)
        assert awari.terminal_outcome(s) is Outcome.WIN_FIRST

    def test_empty_row_sweeps_remaining_counters_to_the_mover(self, awari):
        # SECOND to move with an empty row: the board remainder goes to FIRST
        holes = [4, 4, 4, 4, 4, 4, 0, 0, 0, 0, 0, 0]
        s = awari.state_from_holes(holes, 12, 12, Player.SECOND)
        assert awari.terminal_outcome(s) is Outcome.WIN_FIRST  # 12 + 24 > 12

    def test_legal_moves_on_terminal_is_contract_violation(self, awari):
        holes = [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]
        s = awari.state_from_holes(holes, 23, 23, Player.FIRST)
        with pytest.raises(ContractViolation):
            awari.legal_moves(s)


class TestConservation:
    def test_counters_conserved_over_random_games(self, awari, rng):
        for _ in range(200):
            s = awari.initial_state()
            for _ply in range(400):
                if awari.terminal_outcome(s) is not None:
                    break
                moves = awari.legal_moves(s)
                s = awari.apply(s, moves[rng.randrange(len(moves))])
                assert sum(s.holes) + s.captured_first + s.captured_second == 48

    def test_notation_round_trip(self, awari):
        for move in range(6):
            assert awari.parse_move(awari.render_move(move)) == move


class TestTinyVariant:
    def test_tiny_board_shape(self):
        tiny = AwariGame(holes_per_row=3, initial_counters=2)
        s = tiny.initial_state()
        assert s.holes == (2,) * 6
        assert tiny.total_counters == 12
        assert tiny.legal_moves(s) == [0, 1, 2]

    def test_max_moves_cap_draws(self):
        tiny = AwariGame(3, 2, max_moves=1)
        s = tiny.apply(tiny.initial_state(), 0)
        assert tiny.terminal_outcome(s) is Outcome.DRAW
