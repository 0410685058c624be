from __future__ import annotations

import random

import pytest

from pnmcts.core import ContractViolation, IllegalMoveError, Outcome, Player
from pnmcts.games import LoaGame, LoaMove

from .support.oracles import loa_connected_bfs, loa_moves_by_scan, loa_piece_coords, random_position


class TestInitialPosition:
    def test_piece_counts_8x8(self, loa8):
        s = loa8.initial_state()
        assert bin(s.first).count("1") == 12
        assert bin(s.second).count("1") == 12

    def test_first_player_on_top_and_bottom_rows(self, loa8):
        coords = loa_piece_coords(loa8.initial_state(), Player.FIRST)
        assert coords == {(x, y) for x in range(1, 7) for y in (0, 7)}

    def test_second_player_on_left_and_right_files(self, loa8):
        coords = loa_piece_coords(loa8.initial_state(), Player.SECOND)
        assert coords == {(x, y) for x in (0, 7) for y in range(1, 7)}

    def test_7x7_has_five_per_segment(self, loa7):
        s = loa7.initial_state()
        assert bin(s.first).count("1") == 10
        assert bin(s.second).count("1") == 10

    def test_initial_moves_8x8(self, loa8):
        # Frozen after cross-checking the generator against the
        # coordinate-scan oracle; the square-by-square hand enumeration
        # gives each of the 12 pieces exactly 3 moves.
        moves = loa8.legal_moves(loa8.initial_state())
        assert len(moves) == 36
        assert len(set(moves)) == 36
        assert set(moves) == loa_moves_by_scan(loa8.initial_state())


class TestConnectivity:
    def test_single_piece_is_connected(self, loa8):
        s = loa8.state_from_pieces(["d4"], ["a1", "h8"], Player.SECOND)
        assert loa8.connected(s, Player.FIRST)

    def test_initial_position_is_disconnected_for_both(self, loa8):
        s = loa8.initial_state()
        assert not loa8.connected(s, Player.FIRST)
        assert not loa8.connected(s, Player.SECOND)

    def test_two_by_two_block_is_connected(self, loa8):
        s = loa8.state_from_pieces(["d4", "e4", "d5", "e5"], ["a1", "a8"], Player.SECOND)
        assert loa8.connected(s, Player.FIRST)

    def test_agrees_with_bfs_oracle_on_random_positions(self, loa8, rng):
        for _ in range(1000):
            state = random_position(loa8, rng.randrange(0, 60), rng)
            for player in Player:
                coords = loa_piece_coords(state, player)
                assert loa8.connected(state, player) == loa_connected_bfs(coords)


class TestMoveDistance:
    def test_lone_piece_on_diagonal(self, loa8):
        s = loa8.state_from_pieces(["d4"], ["d5"], Player.FIRST)
        # direction 1 is the NE diagonal; only d4 itself sits on it
        assert loa8.move_distance(s, loa8.parse_square("d4"), 1) == 1

    def test_initial_vertical_file_counts_two(self, loa8):
        # a back-rank piece moving along its file: the file holds exactly the
        # two pieces on ranks 1 and 8
        s = loa8.initial_state()
        assert loa8.move_distance(s, loa8.parse_square("c1"), 2) == 2

    def test_colors_both_count(self, loa8):
        s = loa8.state_from_pieces(["d4", "e4", "f4"], ["g4", "h4"], Player.FIRST)
        assert loa8.move_distance(s, loa8.parse_square("d4"), 0) == 5

    def test_initial_rank_line_counts_six(self, loa8):
        s = loa8.initial_state()
        assert loa8.move_distance(s, loa8.parse_square("b1"), 0) == 6


class TestApply:
    def test_moves_exactly_line_count_squares(self, loa8):
        s = loa8.initial_state()
        nxt = loa8.apply(s, loa8.parse_move("b1-b3"))
        assert loa8.terminal_outcome(nxt) is None
        assert nxt.to_move is Player.SECOND
        assert nxt.move_count == 1

    def test_wrong_distance_is_rejected_with_rule_name(self, loa8):
        with pytest.raises(IllegalMoveError, match="exactly"):
            loa8.apply(loa8.initial_state(), loa8.parse_move("b1-b2"))

    def test_opponent_blocks_path(self, loa8):
        # Rank 4 holds c4, d4, e4: c4 -> f4 travels exactly 3, but the
        # opposing piece on d4 blocks the way.
        s = loa8.state_from_pieces(["c4", "e4"], ["d4", "a1"], Player.FIRST)
        with pytest.raises(IllegalMoveError, match="blocks"):
            loa8.apply(s, loa8.parse_move("c4-f4"))

    def test_jumps_own_and_captures_by_landing(self, loa8):
        # Rank 4 holds b4, c4, e4: b4 -> e4 travels exactly 3, jumping the
        # own piece on c4 and capturing the enemy on e4.
        s = loa8.state_from_pieces(["b4", "c4", "h8"], ["e4", "a8", "g1"], Player.FIRST)
        nxt = loa8.apply(s, loa8.parse_move("b4-e4"))
        assert loa8.terminal_outcome(nxt) is None
        assert loa_piece_coords(nxt, Player.FIRST) == {(2, 3), (4, 3), (7, 7)}
        assert loa_piece_coords(nxt, Player.SECOND) == {(0, 7), (6, 0)}

    def test_input_state_is_not_mutated(self, loa8):
        s = loa8.initial_state()
        before = (s.first, s.second, s.to_move, s.move_count)
        loa8.apply(s, loa8.legal_moves(s)[0])
        assert (s.first, s.second, s.to_move, s.move_count) == before

    def test_apply_on_terminal_is_contract_violation(self, loa8):
        s = loa8.state_from_pieces(["d4", "d5"], ["a1"], Player.SECOND)
        assert loa8.terminal_outcome(s) is not None
        with pytest.raises(ContractViolation):
            loa8.apply(s, LoaMove(0, 1))


class TestTerminalRules:
    def test_connected_side_wins(self, loa8):
        s = loa8.state_from_pieces(["d4", "e5", "d5"], ["a1", "a8"], Player.SECOND)
        assert loa8.terminal_outcome(s) is Outcome.WIN_FIRST

    def test_simultaneous_connection_goes_to_the_mover(self, loa8):
        # Both sides connected; SECOND to move means FIRST just moved.
        s = loa8.state_from_pieces(["d4", "d5"], ["a1", "a2"], Player.SECOND)
        assert loa8.terminal_outcome(s) is Outcome.WIN_FIRST
        s2 = loa8.state_from_pieces(["d4", "d5"], ["a1", "a2"], Player.FIRST)
        assert loa8.terminal_outcome(s2) is Outcome.WIN_SECOND

    def test_capture_to_single_piece_loses_immediately(self, loa8):
        # FIRST captures SECOND's second-to-last piece... leaving one piece,
        # which is trivially connected: SECOND wins (classic LOA trap).
        s = loa8.state_from_pieces(["b4", "c4", "h8"], ["e4", "a1"], Player.FIRST)
        nxt = loa8.apply(s, loa8.parse_move("b4-e4"))
        assert loa8.terminal_outcome(nxt) is Outcome.WIN_SECOND

    def test_max_moves_cap_scores_a_draw(self):
        capped = LoaGame(4, max_moves=2)
        s = capped.initial_state()
        s = capped.apply(s, capped.legal_moves(s)[0])
        assert capped.terminal_outcome(s) is None
        s = capped.apply(s, capped.legal_moves(s)[0])
        assert capped.terminal_outcome(s) is Outcome.DRAW


class TestSmallBoards:
    def test_4x4_initial_setup(self):
        g = LoaGame(4)
        s = g.initial_state()
        assert loa_piece_coords(s, Player.FIRST) == {(1, 0), (2, 0), (1, 3), (2, 3)}
        assert loa_piece_coords(s, Player.SECOND) == {(0, 1), (0, 2), (3, 1), (3, 2)}

    def test_rejects_boards_below_4(self):
        with pytest.raises(ValueError):
            LoaGame(3)

    def test_generator_matches_scan_oracle_on_random_small_positions(self, rng):
        g = LoaGame(5)
        for _ in range(300):
            state = random_position(g, rng.randrange(0, 30), rng)
            assert set(g.legal_moves(state)) == loa_moves_by_scan(state)


class TestNotation:
    def test_render_parse_round_trip(self, loa8):
        move = LoaMove(loa8.parse_square("b1"), loa8.parse_square("d3"))
        assert loa8.render_move(move) == "b1-d3"
        assert loa8.parse_move("b1-d3") == move

    def test_bad_square_rejected(self, loa8):
        with pytest.raises(ValueError):
            loa8.parse_square("j9")
