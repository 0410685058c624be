"""Game-tree search workbench: MCTS, proof-number search, and PN-biased MCTS."""

from .core import (
    ContractViolation,
    Game,
    IllegalMoveError,
    Outcome,
    Player,
    ScriptedGame,
    ScriptedNode,
    branch,
    leaf,
)

__all__ = [
    "ContractViolation",
    "Game",
    "IllegalMoveError",
    "Outcome",
    "Player",
    "ScriptedGame",
    "ScriptedNode",
    "branch",
    "leaf",
]
