"""Search configuration.

Defaults follow the evaluation protocol used throughout the experiments:
exploration constant 1.4, at most 60 rollouts, pruning thresholds 0.3 (pre)
and 0.4 (post), early stop when the best value estimate improves by less
than 1e-3 over 10 consecutive rollouts.

Configs also load from a flat key-value file::

    lambda = 1.4
    r_max = 60
    tau_pre = 0.3
    planner = tooltree

Unknown keys are ignored so one file can configure the whole harness.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Any, Mapping

_FIELD_ALIASES = {"lambda": "lambda_"}


@dataclass(frozen=True)
class SearchConfig:
    lambda_: float = 1.4
    r_max: int = 60
    tau_pre: float = 0.3
    tau_post: float = 0.4
    top_k: int = 5
    early_stop_epsilon: float = 1e-3
    early_stop_window: int = 10
    jitter_magnitude: float = 1e-6
    anneal_lambda: float | None = None
    max_depth: int = 8
    seed: int = 0
    # executor-invocation cap; None leaves the budget to r_max alone
    max_executions: int | None = None

    def __post_init__(self):
        if self.lambda_ < 0:
            raise ValueError("lambda must be >= 0")
        if self.r_max < 1:
            raise ValueError("r_max must be >= 1")
        for name in ("tau_pre", "tau_post"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")
        if self.early_stop_epsilon <= 0:
            raise ValueError("early_stop_epsilon must be > 0")
        if self.early_stop_window < 1:
            raise ValueError("early_stop_window must be >= 1")
        if self.jitter_magnitude < 0:
            raise ValueError("jitter_magnitude must be >= 0")
        if self.anneal_lambda is not None and not 0.0 < self.anneal_lambda <= 1.0:
            raise ValueError("anneal_lambda must lie in (0, 1]")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.max_executions is not None and self.max_executions < 1:
            raise ValueError("max_executions must be >= 1")

    def override(self, **changes: Any) -> "SearchConfig":
        return replace(self, **changes)

    def to_mapping(self) -> dict[str, Any]:
        out = {}
        for f in fields(self):
            key = "lambda" if f.name == "lambda_" else f.name
            out[key] = getattr(self, f.name)
        return out

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SearchConfig":
        known = {f.name for f in fields(cls)}
        kwargs: dict[str, Any] = {}
        for raw_key, raw_value in data.items():
            key = _FIELD_ALIASES.get(str(raw_key), str(raw_key))
            if key not in known:
                continue
            kwargs[key] = _coerce(key, raw_value)
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path) -> "SearchConfig":
        return cls.from_mapping(parse_flat_config(path))


def _coerce(key: str, value: Any):
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in ("none", "null", ""):
            return None
        if key in ("r_max", "top_k", "early_stop_window", "max_depth", "seed", "max_executions"):
            return int(text)
        return float(text)
    return value


def parse_flat_config(path) -> dict[str, str]:
    """Read `key = value` lines; '#' starts a comment, blank lines ignored."""
    result: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"malformed config line: {line!r}")
            result[key.strip()] = value.strip()
    return result
