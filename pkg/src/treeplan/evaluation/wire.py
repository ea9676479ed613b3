"""HTTP adapter for an external LLM judge.

Wire protocol: POST a JSON body {"system": str, "user": str, "temperature": 0}
to the configured endpoint; the response body must contain the verdict JSON
({"score": ..., "explanation": ...}) somewhere in its text. Two retries with
jittered backoff, then EvaluatorUnavailable. No acceptance path depends on a
live model; tests exercise this through an in-process ASGI transport.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import httpx

from ..errors import EvaluatorUnavailable, MalformedVerdict
from .prompts import render_post_prompt, render_pre_prompt
from .types import PostRequest, PreRequest
from .verdict import parse_verdict


@dataclass(frozen=True)
class WireJudgeConfig:
    endpoint: str
    auth_header: str | None = None
    auth_value: str | None = None
    timeout_s: float = 30.0
    retries: int = 2
    backoff_s: float = 0.2


class WireEvaluator:
    """Judge client speaking the wire protocol above.

    A pre-built httpx.Client may be injected (e.g. one with an ASGITransport)
    so nothing here ever requires a network.
    """

    def __init__(
        self,
        config: WireJudgeConfig,
        client: httpx.Client | None = None,
        sleep=time.sleep,
        rng: random.Random | None = None,
    ):
        self._config = config
        self._client = client or httpx.Client(timeout=config.timeout_s)
        self._sleep = sleep
        self._rng = rng or random.Random(0)

    def _headers(self) -> dict[str, str]:
        if self._config.auth_header and self._config.auth_value:
            return {self._config.auth_header: self._config.auth_value}
        return {}

    def _ask(self, system: str, user: str) -> float:
        body = {"system": system, "user": user, "temperature": 0}
        last_error: Exception | None = None
        for attempt in range(self._config.retries + 1):
            try:
                response = self._client.post(
                    self._config.endpoint, json=body, headers=self._headers()
                )
                response.raise_for_status()
                return parse_verdict(response.text).verdict.score
            except MalformedVerdict:
                raise
            except Exception as exc:  # transport or HTTP status fault
                last_error = exc
                if attempt < self._config.retries:
                    backoff = self._config.backoff_s * (2**attempt)
                    self._sleep(backoff + self._rng.uniform(0, backoff))
        raise EvaluatorUnavailable(str(last_error))

    def score_pre(self, request: PreRequest) -> float:
        system, user = render_pre_prompt(request)
        return self._ask(system, user)

    def score_post(self, request: PostRequest) -> float:
        system, user = render_post_prompt(request)
        return self._ask(system, user)
