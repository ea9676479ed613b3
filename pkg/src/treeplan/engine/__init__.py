from .cache import ExecutionCache, ExecutionSession, Executor
from .config import SearchConfig, parse_flat_config
from .events import verify_search_invariants
from .result import (
    STOP_BUDGET,
    STOP_EARLY,
    STOP_EXHAUSTED,
    SearchResult,
    TracePoint,
    TrajectoryStep,
)
from .search import (
    anneal_lambda,
    apply_post_pruning,
    backpropagate,
    best_trajectory,
    expand,
    run_search,
    select_path,
    should_stop,
    uct_score,
)
from .tree import SearchNode, SearchTree

__all__ = [
    "ExecutionCache",
    "ExecutionSession",
    "Executor",
    "STOP_BUDGET",
    "STOP_EARLY",
    "STOP_EXHAUSTED",
    "SearchConfig",
    "SearchNode",
    "SearchResult",
    "SearchTree",
    "TracePoint",
    "TrajectoryStep",
    "anneal_lambda",
    "apply_post_pruning",
    "backpropagate",
    "best_trajectory",
    "expand",
    "parse_flat_config",
    "run_search",
    "select_path",
    "should_stop",
    "uct_score",
    "verify_search_invariants",
]
