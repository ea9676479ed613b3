"""Shared plumbing for the reference planners.

All planners observe the same tool cards, the same admissibility and
drafting rules, and the same execution cache as the tree search, so a
comparison isolates the planning strategy alone.
"""

from __future__ import annotations

import time
from typing import Any, Callable

from ..evaluation import Evaluator, PreRequest, clamp_unit
from ..tools import ArgumentDraft, Context, ToolCard, ToolRegistry, draft_arguments, is_admissible


def admissible_actions(
    context: Context,
    registry: ToolRegistry,
    evaluator: Evaluator,
    counters: dict[str, int],
) -> list[tuple[ToolCard, ArgumentDraft, float]]:
    """All admissible (card, draft, prior) triples, in card-name order."""
    actions = []
    for card in sorted(registry.cards(), key=lambda c: c.name):
        if not is_admissible(context, card):
            continue
        draft = draft_arguments(context, card)
        score = clamp_unit(evaluator.score_pre(PreRequest(context, card, draft)))
        counters["pre_calls"] += 1
        actions.append((card, draft, score))
    return actions


def goal_of(task) -> Callable[[Context], bool] | None:
    return getattr(task, "goal_predicate", None)


def mean(values) -> float:
    values = list(values)
    return sum(values) / len(values) if values else 0.0
