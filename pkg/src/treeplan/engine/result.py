"""Search outcome: best trajectory, counters, per-rollout trace, event log."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..tools import ArgumentDraft, Context, ToolOutput

STOP_BUDGET = "budget"
STOP_EARLY = "early_stop"
STOP_EXHAUSTED = "tree_exhausted"


@dataclass(frozen=True)
class TrajectoryStep:
    tool: str
    draft: ArgumentDraft
    output: ToolOutput
    r_post: Optional[float]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "tool": self.tool,
            "args": self.draft.canonical_bindings(),
            "output": (
                {"error_token": self.output.error_token}
                if self.output.is_error
                else {"payload": dict(self.output.payload)}
            ),
            "r_post": self.r_post,
        }


@dataclass(frozen=True)
class TracePoint:
    rollout: int
    best_q: float
    wall_time_s: float


@dataclass
class SearchResult:
    best_trajectory: list[TrajectoryStep]
    best_value: float
    rollouts_used: int
    nodes_expanded: int
    stop_reason: str
    trace: list[TracePoint]
    executor_calls: int = 0
    cache_hits: int = 0
    pre_calls: int = 0
    post_calls: int = 0
    final_context: Optional[Context] = None
    events: list[dict[str, Any]] = field(default_factory=list)
    tree_snapshot: list[dict[str, Any]] = field(default_factory=list)

    @property
    def judge_calls(self) -> int:
        return self.pre_calls + self.post_calls

    def to_json_dict(self, include_wall_time: bool = True) -> dict[str, Any]:
        trace = [
            {
                "rollout": p.rollout,
                "best_q": p.best_q,
                **({"wall_time_s": p.wall_time_s} if include_wall_time else {}),
            }
            for p in self.trace
        ]
        return {
            "best_trajectory": [s.to_json_dict() for s in self.best_trajectory],
            "best_value": self.best_value,
            "rollouts_used": self.rollouts_used,
            "nodes_expanded": self.nodes_expanded,
            "stop_reason": self.stop_reason,
            "executor_calls": self.executor_calls,
            "cache_hits": self.cache_hits,
            "pre_calls": self.pre_calls,
            "post_calls": self.post_calls,
            "trace": trace,
            "events": self.events,
            "tree": self.tree_snapshot,
        }
