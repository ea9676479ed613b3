"""Naive lexical prior: surface relevance of a tool card to the query.

This is the fast, fallible foresight signal used as r_pre by the experiment
harness. It scores query/card overlap with the same BM25 machinery as the
retrieval shortlist and squashes the raw score into [0, 1]. It knows nothing
about plans, so distractors engineered to echo the query outrank genuinely
useful tools; grounded post-evaluation is what corrects for that.
"""

from __future__ import annotations

from typing import Iterable

from ..tools import LexicalIndex, ToolCard
from .types import PostRequest, PreRequest

# Squash scale: prior = s / (s + SCALE). Chosen so that zero-overlap cards
# score 0.0 and a couple of matched rare terms already clear tau_pre = 0.3.
SCALE = 2.0


class LexicalPriorEvaluator:
    def __init__(self, cards: Iterable[ToolCard], scale: float = SCALE):
        self._index = LexicalIndex(cards)
        self._position = {card.name: i for i, card in enumerate(self._index.cards)}
        self._scale = scale
        self._cache: dict[tuple[str, str], float] = {}

    def prior(self, query: str, card: ToolCard) -> float:
        key = (query, card.name)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        idx = self._position.get(card.name)
        if idx is None:
            # card outside the indexed corpus: score against nothing
            value = 0.0
        else:
            raw = self._index.score(query, idx)
            value = raw / (raw + self._scale) if raw > 0 else 0.0
        self._cache[key] = value
        return value

    def score_pre(self, request: PreRequest) -> float:
        return self.prior(request.context.query, request.card)

    def score_post(self, request: PostRequest) -> float:
        raise NotImplementedError("lexical prior is a pre-evaluation signal only")
