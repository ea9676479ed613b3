"""Parsing and rendering of judge verdicts.

Judges answer with a JSON object {"score": <float>, "explanation": "..."}.
Real backends wrap that object in prose or markdown fences, so the parser
scans for the first balanced JSON object carrying a numeric score. Scores
outside [0, 1] clamp to the nearest bound and the parse is flagged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import MalformedVerdict
from .types import JudgeVerdict


@dataclass(frozen=True)
class ParsedVerdict:
    verdict: JudgeVerdict
    clamped: bool = False


def parse_verdict(raw: str) -> ParsedVerdict:
    for candidate in _candidate_objects(raw):
        score = candidate.get("score")
        if isinstance(score, bool) or not isinstance(score, (int, float)):
            continue
        clamped = score < 0.0 or score > 1.0
        bounded = min(1.0, max(0.0, float(score)))
        explanation = str(candidate.get("explanation", ""))
        return ParsedVerdict(JudgeVerdict(bounded, explanation), clamped)
    raise MalformedVerdict("no JSON object with a numeric 'score' field")


def _candidate_objects(raw: str):
    """Yield every balanced top-level {...} slice that parses as an object."""
    depth = 0
    start = None
    in_string = False
    escaped = False
    for i, ch in enumerate(raw):
        if in_string:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_string = False
            continue
        if ch == '"':
            in_string = True
        elif ch == "{":
            if depth == 0:
                start = i
            depth += 1
        elif ch == "}" and depth > 0:
            depth -= 1
            if depth == 0 and start is not None:
                try:
                    obj = json.loads(raw[start : i + 1])
                except json.JSONDecodeError:
                    continue
                if isinstance(obj, dict):
                    yield obj


def render_verdict(verdict: JudgeVerdict) -> str:
    return json.dumps(
        {"score": verdict.score, "explanation": verdict.explanation},
        ensure_ascii=True,
    )
