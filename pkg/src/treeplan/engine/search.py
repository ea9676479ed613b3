"""Prior-guided Monte Carlo tree search over executable tool chains.

One rollout is one pass of: select a leaf by the prior-augmented UCT rule,
expand it if it is an executed, still-expandable node (scoring every
remaining admissible action, thresholding at tau_pre, keeping the top K),
execute exactly one child (a newly kept one with the highest prior, or the
selected unvisited leaf itself), score the grounded output, apply post
pruning, and back the score up to the root. The loop ends on the rollout
budget, the executor-invocation cap, a plateau of the best value estimate,
or a fully exhausted tree.

Selection skips children that are non-expandable and already visited; they
remain in the tree as completed edges and still count toward trajectory
extraction. "Best Q" in the trace and the early-stop rule is the running
maximum of the root's value estimate (the mean of all backed-up rewards),
which keeps rising while rollouts still improve the tree and freezes once
they stop helping; a per-edge maximum would saturate at the first good edge
and stop deep searches prematurely.
"""

from __future__ import annotations

import math
import random
import time
from typing import Any, Callable, Optional, Protocol

from ..errors import EmptyTree, TreeExhausted
from ..evaluation import Evaluator, PostRequest, PreRequest, clamp_unit
from ..tools import ToolRegistry, draft_arguments, is_admissible
from .cache import ExecutionCache, ExecutionSession, Executor
from .config import SearchConfig
from .result import (
    STOP_BUDGET,
    STOP_EARLY,
    STOP_EXHAUSTED,
    SearchResult,
    TracePoint,
    TrajectoryStep,
)
from .tree import SearchNode, SearchTree


class PlanningTask(Protocol):
    query: str

    def goal_predicate(self, context) -> bool: ...


# ---------------------------------------------------------------------------
# Scoring primitives
# ---------------------------------------------------------------------------


def uct_score(child: SearchNode, parent_n: int, lambda_: float) -> float:
    """Prior-augmented UCT. Unvisited children score +inf (first-visit forcing)."""
    if child.visit_count == 0:
        return math.inf
    return child.value + lambda_ * child.r_pre * math.sqrt(
        math.log(parent_n) / child.visit_count
    )


def anneal_lambda(lambda_: float, depth: int, config: SearchConfig) -> float:
    """Depth-aware annealing; identity when disabled (the default)."""
    if config.anneal_lambda is None or depth == 0:
        return lambda_
    return lambda_ * config.anneal_lambda**depth


def backpropagate(child: SearchNode, r_post: float, tree: SearchTree) -> None:
    """Update N and the running-mean Q on every node of the child-root path."""
    for node in tree.path_to_root(child):
        node.visit_count += 1
        node.value += (r_post - node.value) / node.visit_count


def apply_post_pruning(child: SearchNode, r_post: float, config: SearchConfig) -> None:
    """Mark the edge non-expandable when r_post < tau_post (strict)."""
    if r_post < config.tau_post:
        child.expandable = False


def should_stop(trace: list[TracePoint], config: SearchConfig) -> Optional[str]:
    """Budget first, then the plateau rule over the last `window` increases."""
    if len(trace) >= config.r_max:
        return STOP_BUDGET
    window = config.early_stop_window
    if len(trace) >= window + 1:
        recent = trace[-(window + 1) :]
        if all(
            recent[i + 1].best_q - recent[i].best_q < config.early_stop_epsilon
            for i in range(window)
        ):
            return STOP_EARLY
    return None


# ---------------------------------------------------------------------------
# Selection
# ---------------------------------------------------------------------------


def _eligible_children(tree: SearchTree, node: SearchNode) -> list[SearchNode]:
    out = []
    for child_id in node.children:
        child = tree.get(child_id)
        if child.expandable or child.visit_count == 0:
            out.append(child)
    return out


def select_path(
    tree: SearchTree, config: SearchConfig, rng: random.Random
) -> SearchNode:
    """Descend by argmax UCT over expandable-or-unvisited children.

    Score ties break toward the larger child N, then by a jitter draw from
    the run-seeded generator, so genuine score gaps are never overridden.
    Stops at a terminal node, a childless node, or a node whose children are
    all visited and non-expandable (the dead-end case the caller resolves).
    """
    node = tree.root
    while True:
        if node.terminal or not node.children:
            return node
        eligible = _eligible_children(tree, node)
        if not eligible:
            return node
        lam = anneal_lambda(config.lambda_, node.depth, config)
        scored = [(uct_score(child, max(node.visit_count, 1), lam), child) for child in eligible]
        best_score = max(score for score, _ in scored)
        tied = [child for score, child in scored if score == best_score]
        if len(tied) > 1:
            best_n = max(child.visit_count for child in tied)
            tied = [child for child in tied if child.visit_count == best_n]
        if len(tied) > 1:
            draws = [(rng.uniform(0.0, config.jitter_magnitude), i) for i in range(len(tied))]
            pick = max(range(len(tied)), key=lambda i: draws[i])
            node = tied[pick]
        else:
            node = tied[0]


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------


def expand(
    leaf: SearchNode,
    tree: SearchTree,
    registry: ToolRegistry,
    evaluator: Evaluator,
    config: SearchConfig,
    events: list[dict[str, Any]],
    rollout: int,
    counters: dict[str, int],
) -> list[SearchNode]:
    """Instantiate the kept subset of remaining admissible actions.

    Every candidate is drafted and pre-scored; those at or above tau_pre
    survive, the top K by prior (ties by tool name) become children. An
    empty kept set marks the leaf non-expandable for good.
    """
    existing = {tree.get(cid).tool for cid in leaf.children}
    candidates = []
    for card in sorted(registry.cards(), key=lambda c: c.name):
        if card.name in existing:
            continue
        if not is_admissible(leaf.context, card):
            continue
        draft = draft_arguments(leaf.context, card)
        score = clamp_unit(evaluator.score_pre(PreRequest(leaf.context, card, draft)))
        counters["pre_calls"] += 1
        candidates.append((card, draft, score))

    surviving = [c for c in candidates if c[2] >= config.tau_pre]
    surviving.sort(key=lambda c: (-c[2], c[0].name))
    kept = surviving[: config.top_k]

    new_children = [
        tree.add_child(leaf, card.name, draft, score) for card, draft, score in kept
    ]
    events.append(
        {
            "ev": "expand",
            "rollout": rollout,
            "node": leaf.id,
            "candidates": [
                {"tool": card.name, "r_pre": score, "kept": (card, draft, score) in kept}
                for card, draft, score in candidates
            ],
            "kept": [
                {"id": child.id, "tool": child.tool, "r_pre": child.r_pre}
                for child in new_children
            ],
        }
    )
    if not new_children:
        leaf.expandable = False
    return new_children


# ---------------------------------------------------------------------------
# Trajectory extraction
# ---------------------------------------------------------------------------


def best_trajectory(tree: SearchTree) -> list[SearchNode]:
    """Root-to-leaf path of executed nodes maximizing the mean edge Q.

    Ties break toward the higher terminal-edge Q, then the shorter path,
    then lexicographically smaller action names. Raises EmptyTree when no
    node was ever executed.
    """
    candidates: list[list[SearchNode]] = []
    for node in tree.nodes.values():
        if node.is_root or not node.executed or node.visit_count == 0:
            continue
        has_executed_child = any(
            tree.get(cid).executed and tree.get(cid).visit_count > 0
            for cid in node.children
        )
        if has_executed_child:
            continue
        path = list(reversed(tree.path_to_root(node)))[1:]  # drop the root
        candidates.append(path)
    if not candidates:
        raise EmptyTree("no executed nodes in the tree")

    def sort_key(path: list[SearchNode]):
        mean_q = sum(n.value for n in path) / len(path)
        names = tuple(n.tool or "" for n in path)
        return (-mean_q, -path[-1].value, len(path), names)

    return min(candidates, key=sort_key)


def _path_steps(path: list[SearchNode]) -> list[TrajectoryStep]:
    return [
        TrajectoryStep(node.tool, node.draft, node.output, node.last_r_post)
        for node in path
    ]


# ---------------------------------------------------------------------------
# Main loop
# ---------------------------------------------------------------------------


def run_search(
    task: PlanningTask,
    registry: ToolRegistry,
    evaluator: Evaluator,
    executor: Executor,
    config: SearchConfig,
    clock: Callable[[], float] = time.monotonic,
    cache: ExecutionCache | None = None,
) -> SearchResult:
    """Run the full search loop for one task; deterministic given the seed
    (and a deterministic evaluator/executor/clock)."""
    from ..tools import Context

    rng = random.Random(config.seed)
    session = ExecutionSession(executor, cache)
    tree = SearchTree(Context(query=task.query))
    root = tree.root
    root.r_pre = 1.0

    goal = getattr(task, "goal_predicate", None)
    events: list[dict[str, Any]] = []
    trace: list[TracePoint] = []
    counters = {"pre_calls": 0, "post_calls": 0}
    nodes_expanded = 0
    best_q = 0.0
    stop_reason: Optional[str] = None

    while True:
        if len(trace) >= config.r_max:
            stop_reason = STOP_BUDGET
            break
        if config.max_executions is not None and session.invocations >= config.max_executions:
            stop_reason = STOP_BUDGET
            break
        if not root.expandable and not _eligible_children(tree, root):
            stop_reason = STOP_EXHAUSTED
            break

        rollout = len(trace) + 1
        started = clock()
        leaf = select_path(tree, config, rng)
        to_execute: Optional[SearchNode] = None

        if not leaf.is_root and leaf.visit_count == 0:
            # an instantiated-but-unexecuted child forced by selection
            to_execute = leaf
        elif leaf.terminal:
            # completed terminal revisit: back its stored reward up again
            if leaf.last_r_post is not None:
                backpropagate(leaf, leaf.last_r_post, tree)
                events.append(
                    {
                        "ev": "backprop",
                        "rollout": rollout,
                        "path": [n.id for n in tree.path_to_root(leaf)],
                        "value": leaf.last_r_post,
                    }
                )
                best_q = max(best_q, root.value)
        elif not leaf.expandable or leaf.depth >= config.max_depth:
            # dead end reached through still-eligible edges: seal it
            leaf.expandable = False
            events.append({"ev": "exhausted", "rollout": rollout, "node": leaf.id})
        else:
            new_children = expand(
                leaf, tree, registry, evaluator, config, events, rollout, counters
            )
            nodes_expanded += len(new_children)
            if new_children:
                to_execute = min(new_children, key=lambda c: (-c.r_pre, c.tool))

        if to_execute is not None:
            node = to_execute
            parent = tree.get(node.parent)
            card = registry.get(node.tool)
            output, cache_hit = session.run(card, node.draft, parent.context)
            node.output = output
            node.context = parent.context.extend(card, node.draft, output)
            node.executed = True
            events.append(
                {
                    "ev": "execute",
                    "rollout": rollout,
                    "node": node.id,
                    "tool": node.tool,
                    "cache_hit": cache_hit,
                    "error": output.error_token,
                }
            )

            r_post = clamp_unit(
                evaluator.score_post(
                    PostRequest(parent.context, node.tool, node.draft, output, card)
                )
            )
            counters["post_calls"] += 1
            node.last_r_post = r_post
            apply_post_pruning(node, r_post, config)

            if goal is not None and not output.is_error and goal(node.context):
                node.terminal = True
                node.expandable = False
            elif node.depth >= config.max_depth:
                node.terminal = True
                node.expandable = False

            events.append(
                {
                    "ev": "post",
                    "rollout": rollout,
                    "node": node.id,
                    "score": r_post,
                    "pruned": r_post < config.tau_post,
                    "terminal": node.terminal,
                }
            )
            backpropagate(node, r_post, tree)
            events.append(
                {
                    "ev": "backprop",
                    "rollout": rollout,
                    "path": [n.id for n in tree.path_to_root(node)],
                    "value": r_post,
                }
            )
            best_q = max(best_q, root.value)

        trace.append(TracePoint(rollout, best_q, clock() - started))
        events.append({"ev": "rollout", "i": rollout, "best_q": best_q})

        stop_reason = should_stop(trace, config)
        if stop_reason is not None:
            break

    try:
        path = best_trajectory(tree)
        steps = _path_steps(path)
        best_value = sum(n.value for n in path) / len(path)
        final_context = path[-1].context
    except EmptyTree:
        steps, best_value, final_context = [], 0.0, tree.root.context

    return SearchResult(
        best_trajectory=steps,
        best_value=best_value,
        rollouts_used=len(trace),
        nodes_expanded=nodes_expanded,
        stop_reason=stop_reason or STOP_EXHAUSTED,
        trace=trace,
        executor_calls=session.invocations,
        cache_hits=session.cache.hits,
        pre_calls=counters["pre_calls"],
        post_calls=counters["post_calls"],
        final_context=final_context,
        events=events,
        tree_snapshot=tree.snapshot(),
    )
