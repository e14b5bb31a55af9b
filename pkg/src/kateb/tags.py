"""Error tag vocabulary and per-token labels produced by the checking cascade."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique


@unique
class ErrorTag(Enum):
    """Fine-grained error types attached to flagged tokens.

    OK is reserved for unflagged tokens; a flagged token always carries one
    of the other tags (UNK when nothing more specific can be decided).
    """

    OK = "OK"
    ORTH_HAMZA = "ORTH_HAMZA"
    ORTH_TAA = "ORTH_TAA"
    ORTH_ALIF_MAQSURA = "ORTH_ALIF_MAQSURA"
    ORTH_VOWEL = "ORTH_VOWEL"
    ORTH_OTHER = "ORTH_OTHER"
    MORPH = "MORPH"
    SYNTAX = "SYNTAX"
    SEMANTIC = "SEMANTIC"
    PUNCT = "PUNCT"
    MERGE = "MERGE"
    SPLIT = "SPLIT"
    UNK = "UNK"


# One short learner-facing hint per tag.  The UI may localize by tag name;
# these are the service defaults.
HINTS: dict[ErrorTag, str] = {
    ErrorTag.OK: "",
    ErrorTag.ORTH_HAMZA: "Check the hamza: its seat or presence looks wrong.",
    ErrorTag.ORTH_TAA: "Check the ending: taa marbuta (ة) and ha (ه) may be confused.",
    ErrorTag.ORTH_ALIF_MAQSURA: "Check the ending: alif maqsura (ى) and ya (ي) may be confused.",
    ErrorTag.ORTH_VOWEL: "A long vowel letter seems to be missing.",
    ErrorTag.ORTH_OTHER: "The spelling looks wrong.",
    ErrorTag.MORPH: "The word form (prefix or suffix) does not fit.",
    ErrorTag.SYNTAX: "The sentence structure around this word looks wrong.",
    ErrorTag.SEMANTIC: "This word may not fit the intended meaning.",
    ErrorTag.PUNCT: "Check the punctuation here.",
    ErrorTag.MERGE: "This looks like two words written as one; add a space.",
    ErrorTag.SPLIT: "This looks like one word written as two; remove the space.",
    ErrorTag.UNK: "This token looks wrong, but no specific correction was found.",
}

AMBIGUOUS_SUFFIX = " Several corrections are possible (ambiguous)."


def parse_tag(name: str) -> ErrorTag:
    """Map a wire tag string to an ErrorTag, falling back to UNK."""
    try:
        return ErrorTag(name)
    except ValueError:
        return ErrorTag.UNK


@dataclass(frozen=True)
class TokenLabel:
    """Checking verdict for one token.

    Invariant: ``flagged`` is False exactly when ``tag`` is OK, and an
    unflagged label never carries a suggestion.
    """

    token_index: int
    flagged: bool
    tag: ErrorTag
    suggestion: str | None
    hint: str
    confidence: float

    def to_dict(self) -> dict:
        return {
            "token_index": self.token_index,
            "flagged": self.flagged,
            "tag": self.tag.value,
            "suggestion": self.suggestion,
            "hint": self.hint,
            "confidence": self.confidence,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TokenLabel":
        return cls(
            token_index=int(d["token_index"]),
            flagged=bool(d["flagged"]),
            tag=parse_tag(d["tag"]),
            suggestion=d.get("suggestion"),
            hint=d.get("hint", ""),
            confidence=float(d.get("confidence", 1.0)),
        )
