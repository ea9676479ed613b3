"""Reactive greedy planner: execute the highest-prior admissible action,
append, repeat. No lookahead, no backtracking; a polluted context stays
polluted, which is exactly the failure mode the tree search exists to fix.
"""

from __future__ import annotations

import time
from typing import Callable

from ..engine import (
    ExecutionCache,
    ExecutionSession,
    SearchResult,
    STOP_BUDGET,
    STOP_EARLY,
    STOP_EXHAUSTED,
    TracePoint,
    TrajectoryStep,
)
from ..tools import Context, ToolRegistry
from .common import admissible_actions, goal_of, mean


def run_greedy(
    task,
    registry: ToolRegistry,
    evaluator,
    executor,
    budget: int,
    clock: Callable[[], float] = time.monotonic,
    cache: ExecutionCache | None = None,
) -> SearchResult:
    """Budget is denominated in steps; repeated identical calls are served
    from the cache and burn steps without invoking the executor again."""
    if budget < 1:
        raise ValueError("budget must be >= 1 step")
    session = ExecutionSession(executor, cache)
    goal = goal_of(task)
    context = Context(query=task.query)
    counters = {"pre_calls": 0}
    steps: list[TrajectoryStep] = []
    trace: list[TracePoint] = []
    stop_reason = STOP_BUDGET

    for step_index in range(budget):
        started = clock()
        actions = admissible_actions(context, registry, evaluator, counters)
        if not actions:
            stop_reason = STOP_EXHAUSTED
            break
        card, draft, _score = sorted(actions, key=lambda a: (-a[2], a[0].name))[0]
        output, _hit = session.run(card, draft, context)
        context = context.extend(card, draft, output)
        steps.append(TrajectoryStep(card.name, draft, output, None))
        trace.append(TracePoint(step_index + 1, 0.0, clock() - started))
        if goal is not None and goal(context):
            stop_reason = STOP_EARLY
            break

    return SearchResult(
        best_trajectory=steps,
        best_value=mean(s.r_post for s in steps if s.r_post is not None),
        rollouts_used=len(steps),
        nodes_expanded=len(steps),
        stop_reason=stop_reason,
        trace=trace,
        executor_calls=session.invocations,
        cache_hits=session.cache.hits,
        pre_calls=counters["pre_calls"],
        post_calls=0,
        final_context=context,
    )
