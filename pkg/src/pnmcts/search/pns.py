"""Pure proof-number search.

A best-first solver for the binary question "can the player to move at the
root force a win?".  The tree descends to the most-proving leaf (minimum
proof number at OR nodes, minimum disproof number at AND nodes, first child
on ties), expands it with immediate evaluation of every newborn child, and
recomputes ancestors bottom-up, stopping early at the first ancestor whose
pn/dpn pair is unaffected.

Draws count as disproof: the goal is strictly a forced win.  Repeated states
are distinct nodes (the tree really is a tree), so games given to the solver
should be finite, e.g. via their ``max_moves`` draw cap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..core import ContractViolation, Game, Player
from ._engine import expand_all_children, recombine
from .node import SearchNode
from .proof import INF, evaluate_leaf


class Verdict(Enum):
    PROVEN = "proven"
    DISPROVEN = "disproven"
    UNKNOWN = "unknown"


@dataclass
class SolveResult:
    verdict: Verdict
    nodes: int
    elapsed: float
    root_pn: float
    root_dpn: float

    @property
    def decided(self) -> bool:
        return self.verdict is not Verdict.UNKNOWN


def select_most_proving(root: SearchNode, goal_player: Player) -> list[SearchNode]:
    """Path from the root to the most-proving leaf.

    Descends through the child with the smallest proof number at OR nodes and
    the smallest disproof number at AND nodes, taking the first child on
    ties.  The returned leaf always satisfies 1 <= pn, dpn < infinity.
    """
    if root.pn == 0 or root.dpn == 0:
        raise ContractViolation("select_most_proving called on a solved root")
    node = root
    path = [root]
    while node.children is not None:
        pick_pn = node.to_move is goal_player
        best = None
        best_key = INF
        for child in node.children:
            key = child.pn if pick_pn else child.dpn
            if key < best_key:
                best_key = key
                best = child
        node = best
        path.append(node)
    return path


def expand_and_evaluate(game: Game, leaf: SearchNode, goal_player: Player) -> int:
    """Create and immediately evaluate all children of `leaf`; recompute its
    pn/dpn from them.  Returns the number of children created."""
    if leaf.outcome is not None:
        raise ContractViolation("expand_and_evaluate called on a terminal node")
    if leaf.children is not None:
        raise ContractViolation("expand_and_evaluate called on an expanded node")
    expand_all_children(game, leaf, goal_player)
    return len(leaf.children)


def update_ancestors(path: list[SearchNode], goal_player: Player) -> None:
    """Recompute pn/dpn bottom-up along `path` (leaf last), stopping at the
    first ancestor whose pair recombination leaves unchanged."""
    for i in range(len(path) - 2, -1, -1):
        node = path[i]
        pair = recombine(node, goal_player)
        if pair == (node.pn, node.dpn):
            return
        node.pn, node.dpn = pair


def solve(
    game: Game,
    state,
    goal_player: Optional[Player] = None,
    max_nodes: int = 2**20,
) -> SolveResult:
    """Decide whether `goal_player` (default: the player to move) has a
    forced win from `state`, within a node budget."""
    start = time.monotonic()
    if goal_player is None:
        goal_player = state.to_move
    root = SearchNode(state=state, to_move=state.to_move, outcome=game.terminal_outcome(state))
    root.pn, root.dpn = evaluate_leaf(root.outcome, goal_player)
    nodes = 1
    while root.pn != 0 and root.dpn != 0:
        if nodes >= max_nodes:
            return SolveResult(Verdict.UNKNOWN, nodes, time.monotonic() - start, root.pn, root.dpn)
        path = select_most_proving(root, goal_player)
        leaf = path[-1]
        if leaf.state is None:
            leaf.state = game.apply(path[-2].state, leaf.move)
        nodes += expand_and_evaluate(game, leaf, goal_player)
        update_ancestors(path, goal_player)
    verdict = Verdict.PROVEN if root.pn == 0 else Verdict.DISPROVEN
    return SolveResult(verdict, nodes, time.monotonic() - start, root.pn, root.dpn)
