"""Search agents and solvers."""

from ._engine import SearchResult
from .config import SearchConfig
from .mcts import search
from .node import SearchNode, tree_size
from .pnmcts import PnRanking, compute_ranks, pn_mcts_search
from .pns import SolveResult, Verdict, solve
from .proof import INF, NodeKind, ProofNumbers, combine, evaluate_leaf, node_kind

__all__ = [
    "INF",
    "NodeKind",
    "PnRanking",
    "ProofNumbers",
    "SearchConfig",
    "SearchNode",
    "SearchResult",
    "SolveResult",
    "Verdict",
    "combine",
    "compute_ranks",
    "evaluate_leaf",
    "node_kind",
    "pn_mcts_search",
    "search",
    "solve",
    "tree_size",
]
