"""Prompt rendering for external judges.

Templates live as versioned text assets next to this module; rendering only
substitutes slots, so equal requests always produce byte-identical prompts.
"""

from __future__ import annotations

import json
from importlib import resources
from string import Template

from ..tools import ArgumentDraft, Context, ToolCard
from .types import PostRequest, PreRequest

NO_PRIOR_CALLS = "(no prior tool calls)"


def _load(name: str) -> str:
    return resources.files("treeplan.evaluation").joinpath(f"assets/{name}").read_text(
        encoding="utf-8"
    )


PRE_SYSTEM = _load("pre_system.txt")
PRE_USER = Template(_load("pre_user.txt"))
POST_SYSTEM = _load("post_system.txt")
POST_USER = Template(_load("post_user.txt"))


def _render_history(context: Context) -> str:
    if not context.history:
        return NO_PRIOR_CALLS
    lines = []
    for step, entry in enumerate(context.history):
        if entry.output.is_error:
            result = f"error: {entry.output.error_token}"
        else:
            result = json.dumps(dict(entry.output.payload), sort_keys=True, ensure_ascii=True)
        args = json.dumps(entry.draft.canonical_bindings(), sort_keys=True, ensure_ascii=True)
        lines.append(f"[{step}] {entry.tool}({args}) -> {result}")
    return "\n".join(lines)


def _draft_json(draft: ArgumentDraft) -> str:
    return json.dumps(draft.canonical_bindings(), sort_keys=True, ensure_ascii=True)


def _card_slots(card: ToolCard) -> dict[str, str]:
    return {
        "TOOL_NAME": card.name,
        "TOOL_DESCRIPTION": card.description,
        "TOOL_INPUT_SCHEMA": json.dumps(card.input_schema(), sort_keys=True),
        "TOOL_OUTPUT_SCHEMA": json.dumps(card.output_schema(), sort_keys=True),
        "TOOL_EXAMPLES": json.dumps(
            [{"input": dict(i), "output": dict(o)} for i, o in card.examples],
            sort_keys=True,
        ),
    }


def render_pre_prompt(request: PreRequest) -> tuple[str, str]:
    slots = {
        "USER_QUERY": request.context.query,
        "CURRENT_CONTEXT": _render_history(request.context),
        "ARGUMENT_DRAFT_JSON": _draft_json(request.draft),
        **_card_slots(request.card),
    }
    return PRE_SYSTEM, PRE_USER.substitute(slots)


def render_post_prompt(request: PostRequest) -> tuple[str, str]:
    if request.output.is_error:
        raw = request.output.error_token or ""
    else:
        raw = json.dumps(dict(request.output.payload), sort_keys=True, ensure_ascii=True)
    card = request.card
    card_slots = (
        _card_slots(card)
        if card is not None
        else {
            "TOOL_NAME": request.tool,
            "TOOL_DESCRIPTION": "",
            "TOOL_INPUT_SCHEMA": "{}",
            "TOOL_OUTPUT_SCHEMA": "{}",
            "TOOL_EXAMPLES": "[]",
        }
    )
    slots = {
        "USER_QUERY": request.context_before.query,
        "CONTEXT_BEFORE_CALL": _render_history(request.context_before),
        "ARGUMENT_JSON": _draft_json(request.draft),
        "TOOL_OUTPUT_RAW": raw,
        **card_slots,
    }
    return POST_SYSTEM, POST_USER.substitute(slots)
