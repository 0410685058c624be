"""Concrete rule engines and the string-id registry used by the CLI."""

from __future__ import annotations

from typing import Callable

from ..core import Game
from .awari import AwariGame, AwariState
from .gomoku import GomokuGame, GomokuState
from .knightthrough import KnightthroughGame, KtMove, KtState
from .loa import LoaGame, LoaMove, LoaState

_REGISTRY: dict[str, Callable[[], Game]] = {
    "loa7": lambda: LoaGame(7),
    "loa8": lambda: LoaGame(8),
    "awari": AwariGame,
    "gomoku": GomokuGame,
    "knightthrough": KnightthroughGame,
}


def game_ids() -> list[str]:
    return sorted(_REGISTRY)


def make_game(game_id: str) -> Game:
    try:
        factory = _REGISTRY[game_id]
    except KeyError:
        raise KeyError(f"unknown game {game_id!r}; available: {', '.join(game_ids())}") from None
    return factory()


__all__ = [
    "AwariGame",
    "AwariState",
    "GomokuGame",
    "GomokuState",
    "KnightthroughGame",
    "KtMove",
    "KtState",
    "LoaGame",
    "LoaMove",
    "LoaState",
    "game_ids",
    "make_game",
]
