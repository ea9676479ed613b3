"""Lexical relevance scoring and Top-K shortlist over a tool registry.

BM25 over the card corpus (name + description + tags): term-frequency and
inverse-document-frequency with document-length normalization. Dependency
free and fully deterministic, so shortlist ranking is stable across runs.
"""

from __future__ import annotations

import math
import re
from typing import Iterable

from .registry import ToolRegistry
from .schema import ToolCard

_TOKEN = re.compile(r"[a-z0-9]+")

K1 = 1.5
B = 0.75


def tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text.lower())


def card_tokens(card: ToolCard) -> list[str]:
    return tokenize(" ".join([card.name, card.description, " ".join(card.domain_tags)]))


class LexicalIndex:
    """BM25 index over a fixed set of cards."""

    def __init__(self, cards: Iterable[ToolCard]):
        self.cards = list(cards)
        self._docs = [card_tokens(c) for c in self.cards]
        self._doc_len = [len(d) for d in self._docs]
        n = len(self._docs)
        self._avg_len = (sum(self._doc_len) / n) if n else 0.0
        df: dict[str, int] = {}
        for doc in self._docs:
            for term in set(doc):
                df[term] = df.get(term, 0) + 1
        self._idf = {
            term: math.log((n - d + 0.5) / (d + 0.5) + 1.0) for term, d in df.items()
        }
        self._tf = [
            {t: doc.count(t) for t in set(doc)} for doc in self._docs
        ]

    def score(self, query: str, doc_index: int) -> float:
        terms = tokenize(query)
        tf = self._tf[doc_index]
        dl = self._doc_len[doc_index]
        norm = 1 - B + B * dl / self._avg_len if self._avg_len else 1.0
        score = 0.0
        for term in terms:
            f = tf.get(term)
            if not f:
                continue
            score += self._idf[term] * f * (K1 + 1) / (f + K1 * norm)
        return score

    def scores(self, query: str) -> list[tuple[ToolCard, float]]:
        return [(card, self.score(query, i)) for i, card in enumerate(self.cards)]


def retrieve_shortlist(query: str, registry: ToolRegistry, k: int) -> list[ToolCard]:
    """The min(k, |registry|) most query-relevant cards, ties broken by name."""
    if k < 1:
        raise ValueError("k must be >= 1")
    index = LexicalIndex(registry.cards())
    ranked = sorted(index.scores(query), key=lambda cs: (-cs[1], cs[0].name))
    return [card for card, _ in ranked[:k]]
