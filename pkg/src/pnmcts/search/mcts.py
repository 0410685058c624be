"""Baseline Monte-Carlo Tree Search.

Upper-confidence selection over visited children, single-child expansion
chosen uniformly among untried moves, uniform-random playouts scored +1/0/-1
for the root player, and average-reward backpropagation stored negamax-style
per node.  The final move is the root child with the most visits (ties by
mean value, then uniformly at random).
"""

from __future__ import annotations

import math
import random
from typing import Optional

from ..core import ContractViolation, Game, Player
from . import _engine
from .config import SearchConfig
from .node import SearchNode
from ._engine import SearchResult, backprop_rewards


def uct_select(parent: SearchNode, config: SearchConfig, rng: random.Random) -> SearchNode:
    """Child maximising mean value + C * sqrt(ln n_p / n_i); random on ties.

    Unexpanded moves take strict precedence over this comparison, so calling
    with untried moves pending (or on a terminal/leaf node) is a contract
    violation.
    """
    if parent.outcome is not None:
        raise ContractViolation("uct_select called on a terminal node")
    if parent.untried:
        raise ContractViolation("uct_select called with untried moves pending; expand first")
    if not parent.children:
        raise ContractViolation("uct_select called on a node without children")
    return _engine.argmax_uct(parent.children, config.exploration, math.log(parent.visits), rng)


def expand(leaf: SearchNode, game: Game, rng: random.Random) -> SearchNode:
    """Create one child for a move drawn uniformly from the leaf's untried list.

    The new child starts with zero visits and its own untried list.
    """
    if not leaf.untried:
        raise ContractViolation("expand called on a node without untried moves")
    return _engine.expand_one_child(game, leaf, rng)


def make_root(game: Game, state) -> SearchNode:
    """Root node for a baseline search tree, untried moves initialised."""
    root = SearchNode(state=state, to_move=state.to_move, outcome=game.terminal_outcome(state))
    _engine.init_untried(game, root)
    return root


def playout(game: Game, state, config: SearchConfig, rng: random.Random, reference: Player) -> int:
    """Uniform-random self-play from `state`: +1/-1/0 for `reference`.

    Hitting the playout cap scores 0, the draw-equivalent result.
    """
    return _engine.run_playout(game, state, config, rng, reference)


def backpropagate(path: list[SearchNode], reward: int, reference: Player) -> None:
    """Update visits and perspective-adjusted reward sums along a root-to-leaf path."""
    backprop_rewards(path, reward, reference)


def search(game: Game, state, config: SearchConfig) -> SearchResult:
    """Run selection/expansion/playout/backpropagation until the budget ends.

    Returns the most-visited root child's move with diagnostics; a zero
    budget degrades to a uniformly random legal move plus a warning.
    """
    return _engine.run_search(game, state, config, pn_mode=False)
