"""Planning context: tool outputs, argument drafts, admissibility, cache keys.

The context is the ordered record of what has happened so far: the original
query plus every (tool, arguments, output) triple. Admissibility and argument
drafting are pure functions of it, which is what makes search branches
reproducible and cacheable.

Binding values are either literals, references to a prior step's output
field, or a reference to the query text itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping, Union

from ..errors import NotAdmissible
from .schema import SchemaType, TEXT, ToolCard


@dataclass(frozen=True)
class HistoryRef:
    """Reference to an output field of history entry `step` (0-based)."""

    step: int
    field: str


@dataclass(frozen=True)
class QueryRef:
    """Reference to the literal query text."""


QUERY_REF = QueryRef()

BoundValue = Union[HistoryRef, QueryRef, str, int, float, bool, None]


@dataclass(frozen=True)
class ArgumentDraft:
    """A concrete binding of a tool's input fields."""

    bindings: Mapping[str, BoundValue]

    def canonical_bindings(self) -> dict[str, Any]:
        return {name: _canon_value(v) for name, v in sorted(self.bindings.items())}


def _canon_value(value: BoundValue) -> Any:
    if isinstance(value, HistoryRef):
        return ["ref", value.step, value.field]
    if isinstance(value, QueryRef):
        return ["query"]
    return ["lit", value]


@dataclass(frozen=True)
class ToolOutput:
    """Either a non-empty payload or an error token, never both."""

    payload: Mapping[str, Any] = field(default_factory=dict)
    error_token: str | None = None

    def __post_init__(self):
        has_payload = bool(self.payload)
        has_error = self.error_token is not None
        if has_payload == has_error:
            raise ValueError("exactly one of payload / error_token must be present")

    @property
    def is_error(self) -> bool:
        return self.error_token is not None


@dataclass(frozen=True)
class HistoryEntry:
    tool: str
    draft: ArgumentDraft
    output: ToolOutput
    # output field types, captured from the tool card when the entry is
    # appended, so the context stays self-describing
    output_types: tuple[tuple[str, SchemaType], ...] = ()


@dataclass(frozen=True)
class Context:
    query: str
    history: tuple[HistoryEntry, ...] = ()

    def extend(self, card: ToolCard, draft: ArgumentDraft, output: ToolOutput) -> "Context":
        types = tuple((f.name, f.type) for f in card.outputs)
        entry = HistoryEntry(card.name, draft, output, types)
        return replace(self, history=self.history + (entry,))

    def available_values(self) -> dict[SchemaType, list[BoundValue]]:
        """Producible references indexed by type, oldest first.

        Recomputed on demand from query + history, so it can never go stale.
        Error outputs contribute nothing. The query itself counts as a text
        value and always sorts before history entries.
        """
        index: dict[SchemaType, list[BoundValue]] = {TEXT: [QUERY_REF]}
        for step, entry in enumerate(self.history):
            if entry.output.is_error:
                continue
            for name, schema_type in entry.output_types:
                if name not in entry.output.payload:
                    continue
                index.setdefault(schema_type, []).append(HistoryRef(step, name))
        return index

    def resolve(self, value: BoundValue) -> Any:
        if isinstance(value, QueryRef):
            return self.query
        if isinstance(value, HistoryRef):
            entry = self.history[value.step]
            return entry.output.payload[value.field]
        return value

    def resolve_draft(self, draft: ArgumentDraft) -> ArgumentDraft:
        """Replace every reference with the concrete value it points at."""
        return ArgumentDraft({k: self.resolve(v) for k, v in draft.bindings.items()})


def is_admissible(context: Context, card: ToolCard) -> bool:
    """True iff every required input field can be bound from the context.

    Optional fields never block a tool. No cross-modal coercion: a binding
    candidate must carry exactly the field's declared type.
    """
    available = context.available_values()
    return all(available.get(f.type) for f in card.required_inputs())


def draft_arguments(context: Context, card: ToolCard) -> ArgumentDraft:
    """Build the minimal schema-valid draft: bind each required field to the
    most recent type-compatible producer, falling back to the query for text.

    Deterministic given (context, card): candidates are ordered oldest-first
    by construction and the last one wins; within a history entry, the first
    declared output field of the right type is used.
    """
    available = context.available_values()
    bindings: dict[str, BoundValue] = {}
    for f in card.required_inputs():
        candidates = available.get(f.type)
        if not candidates:
            raise NotAdmissible(f"{card.name}: no candidate for required field {f.name!r}")
        bindings[f.name] = candidates[-1]
    return ArgumentDraft(bindings)


def canonical_cache_key(tool_name: str, args: ArgumentDraft) -> str:
    """Opaque key, a pure function of the tool name and canonicalized bindings.

    Field names are sorted, references normalize to history indices, and
    literals are tagged so they can never collide with reference encodings.
    Semantically equal drafts therefore produce equal keys.
    """
    body = {"tool": tool_name, "args": args.canonical_bindings()}
    return json.dumps(body, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
