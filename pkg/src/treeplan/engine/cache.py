"""Deterministic execution caching for one search session.

Keys are canonical (tool, resolved arguments) strings: references are
resolved to the concrete values they point at before keying, so identical
concrete calls are recognized across branches while distinct branch values
never collide. A key, once written, is never overwritten for the lifetime of
the session.
"""

from __future__ import annotations

from typing import Any, Callable, Protocol

from ..tools import ArgumentDraft, Context, ToolCard, ToolOutput, canonical_cache_key


class Executor(Protocol):
    def execute(self, tool: str, args: ArgumentDraft, context: Context) -> ToolOutput: ...


class ExecutionCache:
    def __init__(self):
        self.entries: dict[str, ToolOutput] = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: str) -> ToolOutput | None:
        output = self.entries.get(key)
        if output is not None:
            self.hits += 1
        return output

    def put(self, key: str, output: ToolOutput) -> None:
        if key in self.entries:
            raise RuntimeError(f"cache key overwritten within a session: {key}")
        self.misses += 1
        self.entries[key] = output


class ExecutionSession:
    """Executor + cache pair shared by every planner for one task run.

    Executor faults never propagate: they become error-token outputs so that
    scoring and pruning deal with failures explicitly. Invocations counts
    actual executor calls, i.e. cache misses only.
    """

    def __init__(self, executor: Executor, cache: ExecutionCache | None = None):
        self.executor = executor
        self.cache = cache or ExecutionCache()
        self.invocations = 0

    def run(self, card: ToolCard, draft: ArgumentDraft, context: Context) -> tuple[ToolOutput, bool]:
        """Execute (or replay) one call; returns (output, cache_hit)."""
        resolved = context.resolve_draft(draft)
        key = canonical_cache_key(card.name, resolved)
        cached = self.cache.get(key)
        if cached is not None:
            return cached, True
        try:
            output = self.executor.execute(card.name, resolved, context)
        except Exception as exc:
            output = ToolOutput(error_token=type(exc).__name__)
        self.invocations += 1
        self.cache.put(key, output)
        return output, False
