"""Tree node shared by all three search algorithms.

A node carries both kinds of statistics: visit count and accumulated reward
for the Monte-Carlo side, and proof/disproof numbers for the proof-number
side.  The plain MCTS agent leaves the pn/dpn fields inert at (1, 1).

Rewards are stored negamax-style: ``reward_sum`` accumulates results from
the perspective of the player who moved into the node (for the root, the
opponent of the player to move there), so selection reads a child's mean
value directly without sign fixing.

Children created by all-at-once expansion start without a state; the state
is materialised from the parent on first descent.  Their terminal status
and to-move player are known at creation, which is all the proof-number
bookkeeping needs.
"""

from __future__ import annotations

from typing import Optional

from ..core import Outcome, Player
from .proof import INF


class SearchNode:
    __slots__ = (
        "move",
        "state",
        "to_move",
        "outcome",
        "visits",
        "reward_sum",
        "children",
        "untried",
        "fresh",
        "pn",
        "dpn",
        "ranks",
        "max_rank",
    )

    def __init__(
        self,
        move=None,
        state=None,
        to_move: Optional[Player] = None,
        outcome: Optional[Outcome] = None,
    ):
        self.move = move
        self.state = state
        self.to_move = to_move
        self.outcome = outcome
        self.visits = 0
        self.reward_sum = 0
        self.children: Optional[list[SearchNode]] = None
        self.untried: Optional[list] = None
        self.fresh: int = 0  # children not yet visited (all-at-once expansion)
        self.pn: float = 1.0
        self.dpn: float = 1.0
        self.ranks: Optional[list[int]] = None
        self.max_rank: int = 0

    @property
    def value(self) -> float:
        """Mean reward in [-1, 1]; only defined once visited."""
        return self.reward_sum / self.visits

    @property
    def proven(self) -> bool:
        return self.pn == 0

    @property
    def disproven(self) -> bool:
        return self.dpn == 0

    def set_solved(self, proven: bool) -> None:
        if proven:
            self.pn, self.dpn = 0.0, INF
        else:
            self.pn, self.dpn = INF, 0.0

    def __repr__(self) -> str:
        return (
            f"SearchNode(move={self.move!r}, n={self.visits}, "
            f"sum={self.reward_sum}, pn={self.pn}, dpn={self.dpn})"
        )


def tree_size(root: SearchNode) -> int:
    """Number of nodes in the (sub)tree, the root included."""
    count = 1
    stack = [root]
    while stack:
        node = stack.pop()
        if node.children:
            count += len(node.children)
            stack.extend(node.children)
    return count
