"""Best-first search over prior-scored partial plans.

Partial trajectories are ranked by the mean prior along the path and
extended without executing anything; a path only runs against the real
executor once it has no admissible extensions left or hits the depth cap.
Pure foresight: grounded feedback never enters the ranking.
"""

from __future__ import annotations

import heapq
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
from ..errors import NotAdmissible
from ..tools import ArgumentDraft, Context, ToolCard, ToolOutput, ToolRegistry, draft_arguments
from .common import admissible_actions, goal_of, mean

PENDING = "<pending>"


def _speculative_extend(context: Context, card: ToolCard) -> Context:
    # hypothetical output: declared fields filled with a placeholder, so
    # type-level admissibility and drafting keep working downstream
    payload = {f.name: PENDING for f in card.outputs} or {"_": PENDING}
    draft = draft_arguments(context, card)
    return context.extend(card, draft, ToolOutput(payload=payload))


def run_best_first(
    task,
    registry: ToolRegistry,
    evaluator,
    executor,
    budget: int,
    max_depth: int = 8,
    clock: Callable[[], float] = time.monotonic,
    cache: ExecutionCache | None = None,
) -> SearchResult:
    """Budget caps both frontier expansions and executor invocations."""
    if budget < 1:
        raise ValueError("budget must be >= 1 expansion")
    session = ExecutionSession(executor, cache)
    goal = goal_of(task)
    root_context = Context(query=task.query)
    counters = {"pre_calls": 0}

    # heap entries: (-mean prior, tool names, cards along the path, speculative context)
    frontier: list[tuple[float, tuple[str, ...], list[ToolCard], Context]] = []
    started_at = clock()

    def push(priors: list[float], cards: list[ToolCard], context: Context) -> None:
        names = tuple(c.name for c in cards)
        heapq.heappush(frontier, (-mean(priors), names, priors, cards, context))

    for card, _draft, score in admissible_actions(root_context, registry, evaluator, counters):
        push([score], [card], _speculative_extend(root_context, card))

    best_steps: list[TrajectoryStep] = []
    best_context = root_context
    expansions = 0
    executed_paths = 0
    trace: list[TracePoint] = []
    stop_reason = STOP_EXHAUSTED

    def execute_path(cards: list[ToolCard]) -> tuple[list[TrajectoryStep], Context, bool]:
        nonlocal stop_reason
        context = Context(query=task.query)
        steps: list[TrajectoryStep] = []
        for card in cards:
            if session.invocations >= budget:
                stop_reason = STOP_BUDGET
                break
            try:
                draft = draft_arguments(context, card)
            except NotAdmissible:
                break
            output, _hit = session.run(card, draft, context)
            context = context.extend(card, draft, output)
            steps.append(TrajectoryStep(card.name, draft, output, None))
            if output.is_error:
                break
            if goal is not None and goal(context):
                return steps, context, True
        return steps, context, False

    while frontier:
        if expansions >= budget or session.invocations >= budget:
            stop_reason = STOP_BUDGET
            break
        _neg, _names, priors, cards, spec_context = heapq.heappop(frontier)
        extensions = (
            admissible_actions(spec_context, registry, evaluator, counters)
            if len(cards) < max_depth
            else []
        )
        expansions += 1
        trace.append(TracePoint(expansions, -_neg, clock() - started_at))
        if extensions:
            seen = {c.name for c in cards}
            for card, _draft, score in extensions:
                if card.name in seen:
                    continue  # no repeats within one planned path
                push(priors + [score], cards + [card], _speculative_extend(spec_context, card))
            continue
        # terminal plan: run it for real
        executed_paths += 1
        steps, context, success = execute_path(cards)
        if len(steps) > len(best_steps):
            best_steps, best_context = steps, context
        if success:
            best_steps, best_context = steps, context
            stop_reason = STOP_EARLY
            break

    return SearchResult(
        best_trajectory=best_steps,
        best_value=mean(s.r_post for s in best_steps if s.r_post is not None),
        rollouts_used=expansions,
        nodes_expanded=expansions,
        stop_reason=stop_reason,
        trace=trace,
        executor_calls=session.invocations,
        cache_hits=session.cache.hits,
        pre_calls=counters["pre_calls"],
        post_calls=0,
        final_context=best_context,
    )
