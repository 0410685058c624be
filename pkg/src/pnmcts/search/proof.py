"""Proof and disproof numbers over AND/OR trees.

A node's proof number (pn) is the minimum number of leaves that still have
to be proven to prove it; the disproof number (dpn) is the analogue for
disproving.  Proving means a forced win for the goal player; losses and
draws both count as disproof.  Infinity is a genuine saturating value
(``math.inf``), never a large finite stand-in: sums through it stay infinite
and minima ignore it unless every operand is infinite.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable, NamedTuple, Optional

from ..core import Outcome, Player

INF = math.inf


class NodeKind(Enum):
    OR = "or"  # goal player to move: proving one child suffices
    AND = "and"  # opponent to move: every child must be proven


class ProofNumbers(NamedTuple):
    pn: float
    dpn: float

    @property
    def proven(self) -> bool:
        return self.pn == 0

    @property
    def disproven(self) -> bool:
        return self.dpn == 0


PROVEN = ProofNumbers(0, INF)
DISPROVEN = ProofNumbers(INF, 0)
UNKNOWN_LEAF = ProofNumbers(1, 1)


def node_kind(to_move: Player, goal_player: Player) -> NodeKind:
    return NodeKind.OR if to_move is goal_player else NodeKind.AND


def evaluate_leaf(outcome: Optional[Outcome], goal_player: Player) -> ProofNumbers:
    """pn/dpn of a leaf: solved for terminal states, (1, 1) otherwise."""
    if outcome is None:
        return UNKNOWN_LEAF
    return PROVEN if outcome.winner is goal_player else DISPROVEN


def combine(kind: NodeKind, children: Iterable[ProofNumbers]) -> ProofNumbers:
    """pn/dpn of an internal node from its children, with saturating arithmetic."""
    it = iter(children)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("combine requires at least one child") from None
    pn, dpn = first
    if kind is NodeKind.OR:
        for c in it:
            if c.pn < pn:
                pn = c.pn
            dpn += c.dpn
    else:
        for c in it:
            pn += c.pn
            if c.dpn < dpn:
                dpn = c.dpn
    return ProofNumbers(pn, dpn)
