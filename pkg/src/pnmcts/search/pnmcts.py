"""MCTS with proof-number-ranked selection.

The selection score gains a third term: children are ranked by proof number
at OR nodes (disproof number at AND nodes) using competition ranking, ties
sharing a rank, and the normalised rank feeds a bonus
``C_pn * (1 - rank / max_rank)`` on top of the usual two terms.  Ranks only
use the order of the (dis)proof numbers, never their magnitudes.

To make sibling ranks well-defined, expansion creates all children of a node
at once with immediately evaluated proof numbers, which the backpropagation
step keeps consistent bottom-up (with the usual early stop).  Selection may
still wander into proven or disproven subtrees; nothing else about the MCTS
loop changes.  The final move prefers a proven root child outright and
otherwise avoids disproven children before falling back to max visits.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from ..core import ContractViolation, Game, Player
from . import _engine
from ._engine import SearchResult
from .config import SearchConfig
from .node import SearchNode
from .proof import NodeKind, ProofNumbers


@dataclass(frozen=True)
class PnRanking:
    """Competition ranking of a node's children: rank = 1 + number of
    strictly better siblings; equal keys share a rank; infinity ranks worst."""

    ranks: tuple[int, ...]
    max_rank: int


def compute_ranks(parent_kind: NodeKind, children: Sequence[ProofNumbers]) -> PnRanking:
    """Rank children by proof number (OR parent) or disproof number (AND parent)."""
    if not children:
        raise ContractViolation("compute_ranks requires at least one child")
    if parent_kind is NodeKind.OR:
        keys = [c.pn for c in children]
    else:
        keys = [c.dpn for c in children]
    sorted_keys = sorted(keys)
    rank_of: dict[float, int] = {}
    for i in range(len(sorted_keys) - 1, -1, -1):
        rank_of[sorted_keys[i]] = i + 1
    ranks = tuple(rank_of[k] for k in keys)
    return PnRanking(ranks, max(ranks))


def uct_pn_select(
    parent: SearchNode,
    ranking: PnRanking,
    config: SearchConfig,
    rng: random.Random,
) -> SearchNode:
    """Child maximising the rank-biased selection score; random on ties.

    With ``config.pn_weight == 0`` the third term vanishes and the choice is
    identical to plain upper-confidence selection on the same statistics and
    random stream.
    """
    if parent.outcome is not None:
        raise ContractViolation("uct_pn_select called on a terminal node")
    children = parent.children
    if not children:
        raise ContractViolation("uct_pn_select called on a node without children")
    if len(ranking.ranks) != len(children):
        raise ContractViolation("ranking does not match the children")
    if any(c.visits == 0 for c in children):
        raise ContractViolation("uct_pn_select requires every child visited; unvisited children go first")
    return _engine.argmax_uct(
        children,
        config.exploration,
        math.log(parent.visits),
        rng,
        config.pn_weight,
        list(ranking.ranks),
        ranking.max_rank,
    )


def expand_all(game: Game, leaf: SearchNode, goal_player: Player) -> bool:
    """Create every child of `leaf` with immediately evaluated proof numbers
    and recompute the leaf's own pair.  Returns True if the pair changed."""
    if leaf.outcome is not None:
        raise ContractViolation("expand_all called on a terminal node")
    if leaf.children is not None:
        raise ContractViolation("expand_all called on an already expanded node")
    return _engine.expand_all_children(game, leaf, goal_player)


def backpropagate_pn(
    path: list[SearchNode],
    reward: int,
    reference: Player,
    changed_index: Optional[int] = None,
) -> None:
    """MCTS backpropagation plus bottom-up proof-number recombination.

    `changed_index` names the deepest path node whose pn/dpn pair changed
    this simulation (the freshly expanded node), or None when nothing
    changed, in which case no recombination runs at all.
    """
    _engine.backprop_rewards(path, reward, reference)
    if changed_index is not None:
        _engine.propagate_pn_change(path, changed_index, reference)


def pn_mcts_search(game: Game, state, config: SearchConfig, expand_one: bool = False) -> SearchResult:
    """Full search; the final move prefers proven children, then non-disproven.

    `expand_one` is a compatibility mode for the reduction test only: it
    switches to single-child expansion, which makes sibling ranks undefined,
    so it requires ``pn_weight == 0`` and reduces the agent to the baseline.
    """
    if expand_one:
        if config.pn_weight != 0:
            raise ValueError("expand_one mode requires pn_weight == 0 (ranks need full expansion)")
        return _engine.run_search(game, state, config, pn_mode=False)
    return _engine.run_search(game, state, config, pn_mode=True)
