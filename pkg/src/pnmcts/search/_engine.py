"""Shared simulation loop for the MCTS-family agents.

The baseline agent and the proof-number-biased agent differ in three places:
expansion policy (one child per simulation vs all children at once), the
selection formula (plain upper-confidence score vs the same score plus a
normalised proof-number-rank bonus), and the final-move rule (the PN agent
prefers proven root children and avoids disproven ones).  Everything else,
budget handling, playouts, reward bookkeeping, diagnostics, is common and
lives here so the two agents cannot drift apart; with the rank bonus weight
at zero the PN selection path computes bit-identical scores to the baseline.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Any, Optional

from ..core import ContractViolation, Game, Outcome, Player
from .config import SearchConfig
from .node import SearchNode
from .proof import INF


@dataclass
class SearchResult:
    """Chosen move plus the diagnostics every experiment records."""

    move: Any
    simulations: int
    tree_nodes: int
    elapsed: float
    truncated: bool = False
    warning: Optional[str] = None
    root_pn: float = 1.0
    root_dpn: float = 1.0


# ----------------------------------------------------------------------
# Selection arithmetic (shared by both agents and their public ops)
# ----------------------------------------------------------------------


def argmax_uct(
    children: list[SearchNode],
    exploration: float,
    log_parent_visits: float,
    rng: random.Random,
    bonus_weight: float = 0.0,
    ranks: Optional[list[int]] = None,
    max_rank: int = 0,
) -> SearchNode:
    """Highest-scoring child; exact score ties are broken uniformly at random.

    Score is mean reward plus the exploration term; when `bonus_weight` is
    nonzero and `ranks` are supplied, the normalised rank bonus
    ``bonus_weight * (1 - rank/max_rank)`` is added.  A zero bonus weight
    leaves the arithmetic identical to the plain formula.
    """
    best_score = -INF
    ties: list[SearchNode] = []
    use_bonus = bonus_weight != 0.0 and ranks is not None
    sqrt = math.sqrt
    for i, child in enumerate(children):
        n = child.visits
        score = child.reward_sum / n + exploration * sqrt(log_parent_visits / n)
        if use_bonus:
            score += bonus_weight * (1.0 - ranks[i] / max_rank)
        if score > best_score:
            best_score = score
            ties = [child]
        elif score == best_score:
            ties.append(child)
    if len(ties) == 1:
        return ties[0]
    return ties[rng.randrange(len(ties))]


def pick_unvisited(
    children: list[SearchNode],
    rng: random.Random,
    ranks: Optional[list[int]] = None,
) -> Optional[SearchNode]:
    """Best-ranked unvisited child (uniform among rank ties), or None."""
    best_rank = None
    ties: list[SearchNode] = []
    for i, child in enumerate(children):
        if child.visits:
            continue
        rank = ranks[i] if ranks is not None else 0
        if best_rank is None or rank < best_rank:
            best_rank = rank
            ties = [child]
        elif rank == best_rank:
            ties.append(child)
    if not ties:
        return None
    if len(ties) == 1:
        return ties[0]
    return ties[rng.randrange(len(ties))]


# ----------------------------------------------------------------------
# Proof-number bookkeeping on the MCTS tree
# ----------------------------------------------------------------------


def refresh_ranks(node: SearchNode, goal_player: Player) -> None:
    """Recompute the competition ranking of `node`'s children into its cache.

    Children are keyed by proof number when the goal player is to move and
    by disproof number otherwise; equal keys share a rank and infinite keys
    rank worst (rank = 1 + number of strictly smaller keys).
    """
    children = node.children
    if node.to_move is goal_player:
        keys = [c.pn for c in children]
    else:
        keys = [c.dpn for c in children]
    order = sorted(range(len(keys)), key=keys.__getitem__)
    ranks = [0] * len(keys)
    prev_key = None
    rank = 1
    for pos, idx in enumerate(order):
        k = keys[idx]
        if k != prev_key:
            rank = pos + 1
            prev_key = k
        ranks[idx] = rank
    node.ranks = ranks
    node.max_rank = rank  # rank of the last (worst) sorted position


def recombine(node: SearchNode, goal_player: Player) -> tuple[float, float]:
    """pn/dpn pair `node` should carry given its children's current pairs."""
    children = node.children
    if node.to_move is goal_player:  # OR node
        pn = INF
        dpn = 0.0
        for c in children:
            if c.pn < pn:
                pn = c.pn
            dpn += c.dpn
    else:  # AND node
        pn = 0.0
        dpn = INF
        for c in children:
            pn += c.pn
            if c.dpn < dpn:
                dpn = c.dpn
    return pn, dpn


def expand_all_children(game: Game, node: SearchNode, goal_player: Player, evaluated=None) -> bool:
    """Create every child of `node`, each with immediately evaluated pn/dpn.

    Child states stay unmaterialised for alternating games (their to-move
    player is implied); scripted trees materialise eagerly.  Returns True
    when the recombination changed `node`'s own pn/dpn pair.
    """
    moves, outcomes = evaluated if evaluated is not None else game.child_eval(node.state)
    next_player = node.to_move.opponent
    goal_wins = Outcome.win_for(goal_player)
    children = []
    append = children.append
    if game.strictly_alternating:
        for i, move in enumerate(moves):
            outcome = outcomes[i]
            child = SearchNode(move, None, next_player, outcome)
            if outcome is not None:
                if outcome is goal_wins:
                    child.pn, child.dpn = 0.0, INF
                else:
                    child.pn, child.dpn = INF, 0.0
            append(child)
    else:
        for i, move in enumerate(moves):
            outcome = outcomes[i]
            state = game.apply(node.state, move)
            child = SearchNode(move, state, state.to_move, outcome)
            if outcome is not None:
                if outcome is goal_wins:
                    child.pn, child.dpn = 0.0, INF
                else:
                    child.pn, child.dpn = INF, 0.0
            append(child)
    node.children = children
    node.fresh = len(children)
    node.ranks = None
    old = (node.pn, node.dpn)
    node.pn, node.dpn = recombine(node, goal_player)
    return (node.pn, node.dpn) != old


def propagate_pn_change(path: list[SearchNode], changed_index: int, goal_player: Player) -> None:
    """Recombine ancestors of ``path[changed_index]`` bottom-up.

    Stops at the first ancestor whose pn/dpn pair the recombination leaves
    unchanged; rank caches of parents whose children changed are invalidated
    for lazy recomputation on the next selection through them.
    """
    for i in range(changed_index - 1, -1, -1):
        parent = path[i]
        parent.ranks = None
        new = recombine(parent, goal_player)
        if new == (parent.pn, parent.dpn):
            return
        parent.pn, parent.dpn = new


# ----------------------------------------------------------------------
# Reward bookkeeping
# ----------------------------------------------------------------------


def init_untried(game: Game, node: SearchNode) -> None:
    """Give a node its untried (move, outcome) list and empty children list.

    Terminal nodes get empty lists; they are never expanded.
    """
    node.untried = [] if node.outcome is not None else game.child_outcomes(node.state)
    node.children = []


def expand_one_child(game: Game, node: SearchNode, rng: random.Random) -> SearchNode:
    """Pop one untried (move, outcome) pair uniformly at random, attach the
    child node, and initialise its own untried list."""
    i = rng.randrange(len(node.untried))
    move, outcome = node.untried.pop(i)
    state = game.apply_trusted(node.state, move, outcome)
    child = SearchNode(move, state, state.to_move, outcome)
    init_untried(game, child)
    if node.children is None:
        node.children = []
    node.children.append(child)
    return child


def backprop_rewards(path: list[SearchNode], reward: int, reference: Player) -> None:
    """Add one visit along root-to-leaf `path`, storing `reward` (given from
    `reference`'s perspective) in each node's own perspective."""
    prev_to_move = path[0].to_move.opponent
    for node in path:
        node.visits += 1
        node.reward_sum += reward if prev_to_move is reference else -reward
        prev_to_move = node.to_move


def run_playout(game: Game, state, config: SearchConfig, rng: random.Random, reference: Player) -> int:
    outcome = game.random_playout(state, config.playout_cap, rng.getrandbits(64))
    return outcome.reward_for(reference) if outcome is not None else 0


# ----------------------------------------------------------------------
# Final-move policies
# ----------------------------------------------------------------------


def choose_final_move(root: SearchNode, rng: random.Random, pn_aware: bool):
    """Max visits, ties by mean value, then uniform; the PN-aware variant
    first restricts to proven children, else away from disproven ones."""
    pool = root.children
    if pn_aware:
        proven = [c for c in pool if c.pn == 0]
        if proven:
            pool = proven
        else:
            alive = [c for c in pool if c.dpn != 0]
            if alive:
                pool = alive
    best_key = None
    ties: list[SearchNode] = []
    for c in pool:
        v = c.reward_sum / c.visits if c.visits else -INF
        key = (c.visits, v)
        if best_key is None or key > best_key:
            best_key = key
            ties = [c]
        elif key == best_key:
            ties.append(c)
    chosen = ties[0] if len(ties) == 1 else ties[rng.randrange(len(ties))]
    return chosen.move


# ----------------------------------------------------------------------
# The loop
# ----------------------------------------------------------------------


def run_search(game: Game, root_state, config: SearchConfig, pn_mode: bool) -> SearchResult:
    """One full search from `root_state` under `config`.

    `pn_mode` turns on all-children expansion, proof-number maintenance, the
    rank bonus in selection, and the proven-first final-move rule.
    """
    if game.terminal_outcome(root_state) is not None:
        raise ContractViolation("search called on a terminal state")
    rng = random.Random(config.rng_seed)
    start = time.monotonic()

    if config.sim_budget == 0 or config.time_budget == 0:
        moves = game.legal_moves(root_state)
        move = moves[rng.randrange(len(moves))]
        return SearchResult(
            move=move,
            simulations=0,
            tree_nodes=0,
            elapsed=time.monotonic() - start,
            warning="zero budget: returning a uniformly random legal move",
        )

    reference = root_state.to_move  # playout reward frame and the proof goal
    root = SearchNode(state=root_state, to_move=reference)
    if not pn_mode:
        init_untried(game, root)
    nodes_created = 1
    sims = 0
    truncated = False
    exploration = config.exploration
    pn_weight = config.pn_weight if pn_mode else 0.0
    sim_budget = config.sim_budget
    time_budget = config.time_budget
    log = math.log

    while True:
        if sim_budget is not None:
            if sims >= sim_budget:
                break
        elif time.monotonic() - start >= time_budget:
            break

        node = root
        path = [root]
        expanded_index: Optional[int] = None
        expansion_changed = False

        while node.outcome is None:
            if pn_mode:
                if node.children is None:
                    evaluated = game.child_eval(node.state)
                    if nodes_created + len(evaluated[0]) > config.max_nodes:
                        truncated = True
                        break
                    expansion_changed = expand_all_children(game, node, reference, evaluated)
                    nodes_created += len(evaluated[0])
                    expanded_index = len(path) - 1
                if node.ranks is None:
                    refresh_ranks(node, reference)
                if node.fresh:
                    child = pick_unvisited(node.children, rng, node.ranks)
                    node.fresh -= 1
                else:
                    child = argmax_uct(
                        node.children,
                        exploration,
                        log(node.visits),
                        rng,
                        pn_weight,
                        node.ranks,
                        node.max_rank,
                    )
                if child.state is None:
                    child.state = game.apply_trusted(node.state, child.move, child.outcome)
                path.append(child)
                node = child
                if expanded_index is not None:
                    break
            else:
                if node.untried:
                    if nodes_created + 1 > config.max_nodes:
                        truncated = True
                        break
                    child = expand_one_child(game, node, rng)
                    nodes_created += 1
                    path.append(child)
                    node = child
                    break
                child = argmax_uct(node.children, exploration, log(node.visits), rng)
                path.append(child)
                node = child

        if truncated:
            break

        if node.outcome is not None:
            reward = node.outcome.reward_for(reference)
        else:
            reward = run_playout(game, node.state, config, rng, reference)
        backprop_rewards(path, reward, reference)
        if expanded_index is not None and expansion_changed:
            propagate_pn_change(path, expanded_index, reference)
        sims += 1

    warning = None
    if root.children:
        move = choose_final_move(root, rng, pn_aware=pn_mode)
    else:
        moves = game.legal_moves(root_state)
        move = moves[rng.randrange(len(moves))]
        warning = "no simulation completed before the node cap: returning a random legal move"
    if truncated and warning is None:
        warning = f"stopped at the node cap ({config.max_nodes}); best move so far"
    return SearchResult(
        move=move,
        simulations=sims,
        tree_nodes=nodes_created,
        elapsed=time.monotonic() - start,
        truncated=truncated,
        warning=warning,
        root_pn=root.pn,
        root_dpn=root.dpn,
    )
