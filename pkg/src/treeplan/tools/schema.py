"""Typed tool cards and their validation.

A tool card describes one callable tool: its name, a prose description, a
typed input/output schema, domain tags and worked examples. Cards are plain
immutable data; everything that interprets them (admissibility, drafting,
retrieval) lives elsewhere.

Cards load from JSON files with the layout::

    {
      "tool_name": "Medical_Object_Detection",
      "description": "A tool that detects ...",
      "input":  {"image": "image-ref", "prompt": "text?"},
      "output": {"detection": "structured(name:text,bbox:text,confidence:number)"},
      "example": {"input": {"image": "x.png"}, "output": {"detection": "..."}},
      "domain_tags": ["medical", "vision"]
    }

A trailing ``?`` on an input descriptor marks the field optional; all other
fields are required. ``domain_tags`` and ``example`` may be omitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

PRIMITIVE_KINDS = ("text", "number", "boolean", "image-ref", "audio-ref")
STRUCTURED = "structured"


@dataclass(frozen=True)
class SchemaType:
    """A value kind: one of the primitive kinds or a structured record."""

    kind: str
    fields: tuple[tuple[str, "SchemaType"], ...] = ()

    def __post_init__(self):
        if self.kind not in PRIMITIVE_KINDS and self.kind != STRUCTURED:
            raise ValueError(f"unknown schema kind: {self.kind!r}")
        if self.kind != STRUCTURED and self.fields:
            raise ValueError("only structured kinds carry fields")

    @property
    def is_structured(self) -> bool:
        return self.kind == STRUCTURED

    def descriptor(self) -> str:
        """Render the single-string type descriptor used in card JSON."""
        if not self.is_structured:
            return self.kind
        inner = ",".join(f"{n}:{t.descriptor()}" for n, t in self.fields)
        return f"{STRUCTURED}({inner})"

    @classmethod
    def parse(cls, descriptor: str) -> "SchemaType":
        """Parse a descriptor string such as ``text`` or ``structured(a:text)``."""
        descriptor = descriptor.strip()
        if descriptor in PRIMITIVE_KINDS:
            return cls(descriptor)
        if descriptor.startswith(f"{STRUCTURED}(") and descriptor.endswith(")"):
            inner = descriptor[len(STRUCTURED) + 1 : -1]
            parts = _split_top_level(inner)
            fields = []
            for part in parts:
                name, _, sub = part.partition(":")
                if not name or not sub:
                    raise ValueError(f"bad structured field: {part!r}")
                fields.append((name.strip(), cls.parse(sub)))
            return cls(STRUCTURED, tuple(fields))
        raise ValueError(f"unknown type descriptor: {descriptor!r}")


def _split_top_level(text: str) -> list[str]:
    # split on commas not nested inside parentheses
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


TEXT = SchemaType("text")
NUMBER = SchemaType("number")
BOOLEAN = SchemaType("boolean")
IMAGE_REF = SchemaType("image-ref")
AUDIO_REF = SchemaType("audio-ref")


@dataclass(frozen=True)
class InputField:
    name: str
    type: SchemaType
    required: bool = True


@dataclass(frozen=True)
class OutputField:
    name: str
    type: SchemaType


@dataclass(frozen=True)
class ToolCard:
    name: str
    description: str
    inputs: tuple[InputField, ...] = ()
    outputs: tuple[OutputField, ...] = ()
    domain_tags: tuple[str, ...] = ()
    examples: tuple[tuple[Mapping[str, Any], Mapping[str, Any]], ...] = ()

    def required_inputs(self) -> tuple[InputField, ...]:
        return tuple(f for f in self.inputs if f.required)

    def input_schema(self) -> dict[str, str]:
        return {f.name: f.type.descriptor() + ("" if f.required else "?") for f in self.inputs}

    def output_schema(self) -> dict[str, str]:
        return {f.name: f.type.descriptor() for f in self.outputs}


@dataclass(frozen=True)
class Violation:
    """One invariant breach, naming the offending field."""

    field: str
    message: str


def validate_card(card: ToolCard) -> list[Violation]:
    """Check every ToolCard invariant; an empty report means the card is valid."""
    report: list[Violation] = []
    if not card.name:
        report.append(Violation("name", "name empty"))
    seen_inputs: set[str] = set()
    for f in card.inputs:
        if not f.name:
            report.append(Violation("input", "input field with empty name"))
        elif f.name in seen_inputs:
            report.append(Violation(f.name, "duplicate input field name"))
        seen_inputs.add(f.name)
        report.extend(_validate_type(f.name, f.type))
    seen_outputs: set[str] = set()
    for f in card.outputs:
        if not f.name:
            report.append(Violation("output", "output field with empty name"))
        elif f.name in seen_outputs:
            report.append(Violation(f.name, "duplicate output field name"))
        seen_outputs.add(f.name)
        report.extend(_validate_type(f.name, f.type))
    required = [f.name for f in card.required_inputs()]
    for idx, (ex_in, _ex_out) in enumerate(card.examples):
        for name in required:
            if name not in ex_in:
                report.append(
                    Violation(name, f"example {idx} omits required input field {name!r}")
                )
    return report


def _validate_type(owner: str, t: SchemaType) -> list[Violation]:
    if not t.is_structured:
        return []
    report = []
    if not t.fields:
        report.append(Violation(owner, "structured type with no named fields"))
    names = [n for n, _ in t.fields]
    if len(names) != len(set(names)):
        report.append(Violation(owner, "structured type with duplicate field names"))
    for name, sub in t.fields:
        report.extend(_validate_type(f"{owner}.{name}", sub))
    return report


# ---------------------------------------------------------------------------
# JSON serialization (appendix metadata layout)
# ---------------------------------------------------------------------------


def card_from_mapping(data: Mapping[str, Any]) -> ToolCard:
    inputs = []
    for name, descriptor in dict(data.get("input", {})).items():
        desc = str(descriptor)
        required = not desc.endswith("?")
        inputs.append(InputField(name, SchemaType.parse(desc.rstrip("?")), required))
    outputs = [
        OutputField(name, SchemaType.parse(str(descriptor)))
        for name, descriptor in dict(data.get("output", {})).items()
    ]
    examples = []
    if "example" in data and data["example"] is not None:
        ex = data["example"]
        examples.append((dict(ex.get("input", {})), dict(ex.get("output", {}))))
    return ToolCard(
        name=str(data.get("tool_name", "")),
        description=str(data.get("description", "")),
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        domain_tags=tuple(data.get("domain_tags", ())),
        examples=tuple(examples),
    )


def card_to_mapping(card: ToolCard) -> dict[str, Any]:
    data: dict[str, Any] = {
        "tool_name": card.name,
        "description": card.description,
        "input": card.input_schema(),
        "output": card.output_schema(),
    }
    if card.examples:
        ex_in, ex_out = card.examples[0]
        data["example"] = {"input": dict(ex_in), "output": dict(ex_out)}
    if card.domain_tags:
        data["domain_tags"] = list(card.domain_tags)
    return data


def load_card(path) -> ToolCard:
    with open(path, "r", encoding="utf-8") as fh:
        return card_from_mapping(json.load(fh))


def load_cards(path) -> list[ToolCard]:
    """Load a JSON file holding either one card object or a list of them."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, list):
        return [card_from_mapping(item) for item in data]
    return [card_from_mapping(data)]
