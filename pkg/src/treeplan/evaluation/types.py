"""Evaluator contract: pre/post requests, verdicts, and the handle protocol.

Every evaluator maps a request to a score in [0, 1]. Pre-evaluation forecasts
how useful a tool call would be before it runs; post-evaluation scores the
grounded output of an executed call. Handles must be stateless or internally
synchronized so they can be shared across concurrent task runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from ..tools import ArgumentDraft, Context, ToolCard, ToolOutput


@dataclass(frozen=True)
class JudgeVerdict:
    score: float
    explanation: str = ""

    def __post_init__(self):
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score out of range: {self.score}")


@dataclass(frozen=True)
class PreRequest:
    context: Context
    card: ToolCard
    draft: ArgumentDraft


@dataclass(frozen=True)
class PostRequest:
    context_before: Context
    tool: str
    draft: ArgumentDraft
    output: ToolOutput
    card: ToolCard | None = None


@dataclass(frozen=True)
class NoiseConfig:
    error_rate: float
    flip_mode: str = "both"  # false_positive_only | false_negative_only | both
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.error_rate <= 1.0:
            raise ValueError("error_rate must lie in [0, 1]")
        if self.flip_mode not in ("false_positive_only", "false_negative_only", "both"):
            raise ValueError(f"unknown flip_mode: {self.flip_mode!r}")


@runtime_checkable
class Evaluator(Protocol):
    def score_pre(self, request: PreRequest) -> float: ...

    def score_post(self, request: PostRequest) -> float: ...


def clamp_unit(value: float) -> float:
    return 0.0 if value < 0.0 else 1.0 if value > 1.0 else value


class CompositeEvaluator:
    """Route pre- and post-evaluation to independent backends.

    The experiment harness pairs a fast predictive prior with a grounded
    post-judge; both sides stay individually swappable.
    """

    def __init__(self, pre: Evaluator, post: Evaluator):
        self._pre = pre
        self._post = post

    def score_pre(self, request: PreRequest) -> float:
        return clamp_unit(self._pre.score_pre(request))

    def score_post(self, request: PostRequest) -> float:
        return clamp_unit(self._post.score_post(request))


class ConstantEvaluator:
    """Fixed scores; used by ablations (r_pre == 1) and tests."""

    def __init__(self, pre: float = 1.0, post: float = 1.0):
        self._pre = clamp_unit(pre)
        self._post = clamp_unit(post)

    def score_pre(self, request: PreRequest) -> float:
        return self._pre

    def score_post(self, request: PostRequest) -> float:
        return self._post
