from __future__ import annotations

import random

import pytest

from pnmcts.core import Outcome, Player, ScriptedGame, branch, leaf
from pnmcts.games import make_game


@pytest.fixture(scope="session")
def loa8():
    return make_game("loa8")


@pytest.fixture(scope="session")
def loa7():
    return make_game("loa7")


@pytest.fixture(scope="session")
def awari():
    return make_game("awari")


@pytest.fixture(scope="session")
def gomoku():
    return make_game("gomoku")


@pytest.fixture(scope="session")
def knightthrough():
    return make_game("knightthrough")


@pytest.fixture(scope="session")
def all_games(loa8, loa7, awari, gomoku, knightthrough):
    return [loa8, loa7, awari, gomoku, knightthrough]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def make_win_in_one_tree():
    """One-level tree where the first player has an immediately winning child."""
    return ScriptedGame(
        branch(
            Player.FIRST,
            [
                leaf(Player.SECOND, Outcome.WIN_SECOND, "losing"),
                leaf(Player.SECOND, Outcome.WIN_FIRST, "winning"),
                leaf(Player.SECOND, Outcome.DRAW, "drawing"),
            ],
            "root",
        )
    )
