"""Arabic text primitives: normalization profiles, tokenization, sentence splitting.

All offsets produced by this module are Unicode scalar (code point) indices,
which in Python coincide with ``str`` indices.  Nothing here ever rewrites the
text it is given: normalization returns a new string used as a matching aid,
and tokens are exact slices of the input.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

# Tatweel / kashida, the elongation filler letter.
TATWEEL = "ـ"

# Seats of hamza that fold onto bare alef for loose matching:
#   U+0623 alef with hamza above, U+0625 alef with hamza below,
#   U+0622 alef with madda above, U+0671 alef wasla.
_HAMZA_SEAT_FOLD = str.maketrans({
    "أ": "ا",
    "إ": "ا",
    "آ": "ا",
    "ٱ": "ا",
})

# The wider hamza-carrier family, used when typing character edits:
# bare alef, the three seated alefs, alef wasla, lone hamza, waw and
# ya hamza carriers.
HAMZA_FAMILY = frozenset("اأإآٱءؤئ")

# Endings commonly confused in learner writing.
TAA_PAIR = frozenset("ةه")        # taa marbuta / ha
ALIF_MAQSURA_PAIR = frozenset("ىي")  # alif maqsura / ya

# Letters that spell long vowels when the writer shortens a vowel.
LONG_VOWEL_LETTERS = frozenset("اوي")  # alef, waw, ya

# Sentence-final punctuation: Latin and Arabic question marks included.
SENTENCE_TERMINATORS = frozenset(".!?؟")

# Token kinds.
WORD = "word"
PUNCT = "punct"
NUMBER = "number"
LATIN = "latin"
TOKEN_KINDS = frozenset({WORD, PUNCT, NUMBER, LATIN})

# Arabic script blocks (base, supplement, extended-A, presentation forms).
_ARABIC_RANGES = (
    ("؀", "ۿ"),
    ("ݐ", "ݿ"),
    ("ࢠ", "ࣿ"),
    ("ﭐ", "﷿"),
    ("ﹰ", "﻿"),
)


@dataclass(frozen=True)
class NormProfile:
    """Which folds a normalization pass applies.

    Folds are matching aids only; stored text is never normalized in place.
    """

    strip_diacritics: bool = False
    strip_tatweel: bool = False
    unify_hamza_seats: bool = False
    unify_taa: bool = False

    @classmethod
    def matching(cls) -> "NormProfile":
        """The everything-on profile used for loose surface comparison."""
        return cls(True, True, True, True)

    @classmethod
    def base(cls) -> "NormProfile":
        """Strip decorations (diacritics, tatweel) without letter folds."""
        return cls(strip_diacritics=True, strip_tatweel=True)


@dataclass(frozen=True)
class Token:
    """One surface token: an exact slice ``text[start:end]`` of the input."""

    surface: str
    start: int
    end: int
    kind: str


@dataclass(frozen=True)
class SpanRange:
    """Half-open scalar index range ``[start, end)`` into a text."""

    start: int
    end: int


def normalize(text: str, profile: NormProfile) -> str:
    """Apply the folds enabled in ``profile``, in a fixed order.

    Idempotent: every fold maps into its own fixed-point set.  The empty
    string is returned unchanged.
    """
    if profile.strip_diacritics:
        # Remove every combining mark (Unicode category Mn), which covers
        # the Arabic short vowels, shadda, sukun, and tanwin.
        text = "".join(ch for ch in text if unicodedata.category(ch) != "Mn")
    if profile.strip_tatweel:
        text = text.replace(TATWEEL, "")
    if profile.unify_hamza_seats:
        text = text.translate(_HAMZA_SEAT_FOLD)
    if profile.unify_taa:
        text = text.replace("ة", "ه")
    return text


def fold_alif_maqsura(text: str) -> str:
    """Fold alif maqsura onto ya; a matching aid kept outside NormProfile."""
    return text.replace("ى", "ي")


def _in_arabic_block(ch: str) -> bool:
    return any(lo <= ch <= hi for lo, hi in _ARABIC_RANGES)


def _classify(ch: str) -> str:
    """Character class for run scanning; combining marks handled by caller."""
    cat = unicodedata.category(ch)
    if cat == "Nd":
        return NUMBER
    if cat.startswith("L"):
        return WORD if _in_arabic_block(ch) else LATIN
    return PUNCT


def tokenize(text: str) -> list[Token]:
    """Split text into word / punct / number / latin tokens.

    Rules, in order per character:
      * whitespace separates tokens and is never part of one;
      * a combining mark extends the currently open token if any,
        otherwise it stands alone as a punct token;
      * punctuation and symbols form one token per scalar;
      * maximal runs of the same class (Arabic word, Latin, digits)
        form one token.

    Offsets are scalar indices; concatenating surfaces with the original
    gaps reconstructs the input exactly.
    """
    tokens: list[Token] = []
    run_start: int | None = None
    run_kind: str | None = None

    def close(upto: int) -> None:
        nonlocal run_start, run_kind
        if run_start is not None:
            tokens.append(Token(text[run_start:upto], run_start, upto, run_kind))
            run_start = None
            run_kind = None

    for i, ch in enumerate(text):
        if ch.isspace():
            close(i)
            continue
        if unicodedata.category(ch) == "Mn" and run_start is not None:
            continue  # mark rides on the open run, whatever its kind
        kind = _classify(ch)
        if kind == PUNCT:
            close(i)
            tokens.append(Token(ch, i, i + 1, PUNCT))
            continue
        if run_kind != kind:
            close(i)
            run_start = i
            run_kind = kind
    close(len(text))
    return tokens


def count_words(tokens: list[Token]) -> int:
    """Number of word-kind tokens."""
    return sum(1 for t in tokens if t.kind == WORD)


def _is_terminator(tok: Token) -> bool:
    return tok.kind == PUNCT and tok.surface in SENTENCE_TERMINATORS


def split_sentences(tokens: list[Token]) -> list[SpanRange]:
    """Sentence ranges over the original text, split after terminators.

    A maximal run of sentence-final punctuation closes one sentence.
    Trailing material without a terminator forms a final sentence.  Every
    token falls inside exactly one returned range.
    """
    ranges: list[SpanRange] = []
    start_idx: int | None = None
    for i, tok in enumerate(tokens):
        if start_idx is None:
            start_idx = i
        nxt_is_term = i + 1 < len(tokens) and _is_terminator(tokens[i + 1])
        if _is_terminator(tok) and not nxt_is_term:
            ranges.append(SpanRange(tokens[start_idx].start, tok.end))
            start_idx = None
    if start_idx is not None:
        ranges.append(SpanRange(tokens[start_idx].start, tokens[-1].end))
    return ranges


def join_tokens(surfaces: list[str]) -> str:
    """Render a token sequence as text: single spaces, none before punctuation."""
    out: list[str] = []
    for surf in surfaces:
        if not surf:
            continue
        attached = _classify(surf[0]) == PUNCT and unicodedata.category(surf[0]) != "Mn"
        if out and not attached:
            out.append(" ")
        out.append(surf)
    return "".join(out)
