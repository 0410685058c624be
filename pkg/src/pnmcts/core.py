"""Abstract two-player, zero-sum, perfect-information game contract.

Every engine and agent in this package programs against the :class:`Game`
interface defined here.  States are immutable values: ``apply`` returns a new
state and never mutates its input, so search trees can safely share states and
independent matches can run in parallel without locking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Protocol, Sequence, runtime_checkable


class ContractViolation(Exception):
    """An operation was called outside its documented precondition."""


class IllegalMoveError(ValueError):
    """A move was rejected by the rules; the message names the violated rule."""


class Player(Enum):
    FIRST = 0
    SECOND = 1

    @property
    def opponent(self) -> "Player":
        return Player.SECOND if self is Player.FIRST else Player.FIRST


class Outcome(Enum):
    """Result of a finished game. Defined only for terminal states."""

    WIN_FIRST = 1
    WIN_SECOND = 2
    DRAW = 3

    @property
    def winner(self) -> Optional[Player]:
        if self is Outcome.WIN_FIRST:
            return Player.FIRST
        if self is Outcome.WIN_SECOND:
            return Player.SECOND
        return None

    def reward_for(self, player: Player) -> int:
        """+1 if `player` won, -1 if they lost, 0 for a draw."""
        w = self.winner
        if w is None:
            return 0
        return 1 if w is player else -1

    @staticmethod
    def win_for(player: Player) -> "Outcome":
        return Outcome.WIN_FIRST if player is Player.FIRST else Outcome.WIN_SECOND


@runtime_checkable
class GameState(Protocol):
    """Minimal surface every game state exposes.

    Concrete states are frozen per-game dataclasses carrying the board
    encoding alongside these two fields.
    """

    to_move: Player
    move_count: int


class Game:
    """Rules engine for one game. Stateless: all methods are pure functions.

    Subclasses must implement `initial_state`, `legal_moves`, `apply`,
    `terminal_outcome`, and the move-notation pair `render_move`/`parse_move`
    (which must round-trip for every legal move).  The remaining methods have
    generic default implementations that subclasses may override with faster
    equivalents; overrides must be observationally identical and are
    cross-checked against the defaults in the test suite.
    """

    game_id: str = "abstract"
    # All four shipped rule engines alternate strictly; ScriptedGame may not.
    strictly_alternating: bool = True

    def initial_state(self) -> GameState:
        raise NotImplementedError

    def legal_moves(self, state: GameState) -> list:
        """All legal moves for ``state.to_move``. Never call on a terminal state."""
        raise NotImplementedError

    def apply(self, state: GameState, move) -> GameState:
        """Successor of `state` after `move`. Raises IllegalMoveError on bad moves."""
        raise NotImplementedError

    def terminal_outcome(self, state: GameState) -> Optional[Outcome]:
        """The game's outcome, or None while the game continues."""
        raise NotImplementedError

    def render_move(self, move) -> str:
        raise NotImplementedError

    def parse_move(self, text: str):
        raise NotImplementedError

    # ------------------------------------------------------------------
    # Derived operations with generic reference implementations.
    # ------------------------------------------------------------------

    def child_outcomes(self, state: GameState) -> list:
        """(move, outcome-of-successor) for every legal move, in legal_moves order.

        Used by searchers that evaluate all children of a node at once; the
        generic version applies every move.  Fast overrides may skip building
        full successor states but must preserve ordering and outcomes exactly.
        """
        moves, outcomes = self.child_eval(state)
        return list(zip(moves, outcomes))

    def child_eval(self, state: GameState) -> tuple:
        """`child_outcomes` as two parallel lists, the form the search loops
        consume; overriding this is enough to accelerate both."""
        moves = self.legal_moves(state)
        return moves, [self.terminal_outcome(self.apply(state, m)) for m in moves]

    def apply_trusted(self, state: GameState, move, outcome: Optional[Outcome]) -> GameState:
        """`apply` for a move already known legal, with its successor's outcome
        already evaluated (as returned by `child_outcomes`).

        Search trees apply only moves they generated, so overrides may skip
        rule validation and outcome recomputation; results must be identical
        to `apply`.
        """
        return self.apply(state, move)

    def random_playout(self, state: GameState, max_moves: int, seed: int) -> Optional[Outcome]:
        """Play uniform-random moves until the game ends or `max_moves` is hit.

        Returns the terminal Outcome, or None when the cap was reached first.
        Deterministic in `seed`; the random stream itself is an implementation
        detail (overrides need not match the generic stream move-for-move).
        """
        rng = random.Random(seed)
        for _ in range(max_moves):
            outcome = self.terminal_outcome(state)
            if outcome is not None:
                return outcome
            moves = self.legal_moves(state)
            state = self.apply(state, moves[rng.randrange(len(moves))])
        return self.terminal_outcome(state)


# ----------------------------------------------------------------------
# Scripted game: an explicit finite tree, for hand-checkable fixtures.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ScriptedNode:
    """One node of an explicit game tree.

    Leaves carry an `outcome`; internal nodes carry `children`.  The tree is
    acyclic by construction (children are built before their parent).
    """

    to_move: Player
    children: tuple = ()
    outcome: Optional[Outcome] = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.children and self.outcome is not None:
            raise ValueError(f"node {self.label!r}: internal nodes cannot carry an outcome")
        if not self.children and self.outcome is None:
            raise ValueError(f"node {self.label!r}: every leaf must carry an outcome")


@dataclass(frozen=True)
class ScriptedState:
    node: ScriptedNode
    to_move: Player = field(init=False)
    move_count: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "to_move", self.node.to_move)


class ScriptedGame(Game):
    """Game whose entire tree is given explicitly.

    Moves are child indices; notation is the decimal index.  Scripted trees
    need not alternate players, so agents treat them with the general
    (state-derived) perspective rules rather than parity shortcuts.
    """

    game_id = "scripted"
    strictly_alternating = False

    def __init__(self, root: ScriptedNode):
        self.root = root

    def initial_state(self) -> ScriptedState:
        return ScriptedState(self.root)

    def legal_moves(self, state: ScriptedState) -> list:
        if state.node.outcome is not None:
            raise ContractViolation("legal_moves called on a terminal scripted node")
        return list(range(len(state.node.children)))

    def apply(self, state: ScriptedState, move) -> ScriptedState:
        if not isinstance(move, int) or not 0 <= move < len(state.node.children):
            raise IllegalMoveError(f"scripted move {move!r} is not a child index of {state.node.label!r}")
        return ScriptedState(state.node.children[move], move_count=state.move_count + 1)

    def terminal_outcome(self, state: ScriptedState) -> Optional[Outcome]:
        return state.node.outcome

    def render_move(self, move) -> str:
        return str(move)

    def parse_move(self, text: str) -> int:
        return int(text)


def leaf(to_move: Player, outcome: Outcome, label: str = "") -> ScriptedNode:
    return ScriptedNode(to_move=to_move, outcome=outcome, label=label)


def branch(to_move: Player, children: Sequence[ScriptedNode], label: str = "") -> ScriptedNode:
    return ScriptedNode(to_move=to_move, children=tuple(children), label=label)
