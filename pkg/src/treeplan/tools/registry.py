"""Immutable-by-convention registry of validated tool cards."""

from __future__ import annotations

from typing import Iterable, Iterator

from ..errors import DuplicateName, InvalidCard
from .schema import ToolCard, validate_card


class ToolRegistry:
    """Name -> card lookup. Cards are validated and frozen on entry; the
    registry itself is only mutated through register_tool, so concurrent
    readers are safe once construction is done."""

    def __init__(self, cards: Iterable[ToolCard] = ()):
        self._cards: dict[str, ToolCard] = {}
        for card in cards:
            register_tool(self, card)

    def __len__(self) -> int:
        return len(self._cards)

    def __contains__(self, name: str) -> bool:
        return name in self._cards

    def __iter__(self) -> Iterator[ToolCard]:
        return iter(self._cards.values())

    def get(self, name: str) -> ToolCard:
        return self._cards[name]

    def names(self) -> list[str]:
        return list(self._cards)

    def cards(self) -> list[ToolCard]:
        return list(self._cards.values())


def register_tool(registry: ToolRegistry, card: ToolCard) -> ToolRegistry:
    """Add a validated card; previously registered cards are untouched."""
    violations = validate_card(card)
    if violations:
        raise InvalidCard(violations)
    if card.name in registry:
        raise DuplicateName(card.name)
    registry._cards[card.name] = card
    return registry
