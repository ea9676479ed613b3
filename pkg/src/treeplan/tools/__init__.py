from .schema import (
    AUDIO_REF,
    BOOLEAN,
    IMAGE_REF,
    InputField,
    NUMBER,
    OutputField,
    SchemaType,
    TEXT,
    ToolCard,
    Violation,
    card_from_mapping,
    card_to_mapping,
    load_card,
    load_cards,
    validate_card,
)
from .context import (
    ArgumentDraft,
    BoundValue,
    Context,
    HistoryEntry,
    HistoryRef,
    QUERY_REF,
    QueryRef,
    ToolOutput,
    canonical_cache_key,
    draft_arguments,
    is_admissible,
)
from .registry import ToolRegistry, register_tool
from .retrieval import LexicalIndex, card_tokens, retrieve_shortlist, tokenize

__all__ = [
    "AUDIO_REF",
    "ArgumentDraft",
    "BOOLEAN",
    "BoundValue",
    "Context",
    "HistoryEntry",
    "HistoryRef",
    "IMAGE_REF",
    "InputField",
    "LexicalIndex",
    "NUMBER",
    "OutputField",
    "QUERY_REF",
    "QueryRef",
    "SchemaType",
    "TEXT",
    "ToolCard",
    "ToolOutput",
    "ToolRegistry",
    "Violation",
    "canonical_cache_key",
    "card_from_mapping",
    "card_to_mapping",
    "card_tokens",
    "draft_arguments",
    "is_admissible",
    "load_card",
    "load_cards",
    "register_tool",
    "retrieve_shortlist",
    "tokenize",
    "validate_card",
]
