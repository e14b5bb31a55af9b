"""Two-stage error detection: binary flagging, then fine-grained typing.

Three interchangeable backends drive the cascade:

* RuleBackend — lexicon plus deterministic repair rules (orthographic folds,
  run-on splits, space-insertion joins).  Precision-first: a word absent from
  the lexicon is only flagged when a single configured repair maps it in.
* ReferenceBackend — labels derived from a known target (corrected) token
  sequence via alignment.
* RemoteBackend — defers to an external HTTP model endpoint.

Stage-1 verdicts always win: a token the first stage leaves unflagged keeps
tag OK no matter what the typing stage says, and every flagged token carries
a non-OK tag (UNK when nothing better is known).
"""

from __future__ import annotations

import hashlib
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import requests

from .editscript import (
    MATCH,
    align_tokens,
    char_edit_script,
    derive_tag,
    group_texts,
)
from .errors import BackendUnavailableError, ValidationError
from .tags import AMBIGUOUS_SUFFIX, HINTS, ErrorTag, TokenLabel, parse_tag
from .textcore import WORD, NormProfile, Token, fold_alif_maqsura, normalize


@dataclass(frozen=True)
class Verdict:
    """Raw backend output for one token, before stage-1 primacy is applied."""

    flagged: bool
    tag: ErrorTag = ErrorTag.OK
    suggestion: str | None = None
    confidence: float = 1.0
    ambiguous: bool = False


class DetectorBackend(ABC):
    """A detection strategy: one verdict per input token."""

    backend_id: str = "abstract"

    @abstractmethod
    def annotate(self, tokens: Sequence[Token]) -> list[Verdict]:
        """Return one Verdict per token, in order."""


def load_lexicon(path: str | Path) -> frozenset[str]:
    """Read a lexicon file: UTF-8, one surface form per line, '#' comments."""
    words: set[str] = set()
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.add(line)
    return frozenset(words)


_BASE = NormProfile.base()
_HAMZA = NormProfile(unify_hamza_seats=True)
_TAA = NormProfile(unify_taa=True)


def _base_form(surface: str) -> str:
    return normalize(surface, _BASE)


class RuleBackend(DetectorBackend):
    """Lexicon-driven detector.

    All matching happens on base-normalized forms (diacritics and tatweel
    stripped); suggestions are always raw lexicon surfaces.
    """

    def __init__(self, lexicon: Sequence[str] | frozenset[str]):
        raw = frozenset(lexicon)
        if not raw:
            raise ValidationError("rule backend needs a non-empty lexicon")
        self._surfaces_by_base: dict[str, list[str]] = {}
        for w in sorted(raw):
            self._surfaces_by_base.setdefault(_base_form(w), []).append(w)
        self._bases = frozenset(self._surfaces_by_base)
        # Fold maps: folded base form -> candidate base forms.
        self._hamza: dict[str, list[str]] = {}
        self._taa: dict[str, list[str]] = {}
        self._maqsura: dict[str, list[str]] = {}
        for base in sorted(self._bases):
            self._hamza.setdefault(normalize(base, _HAMZA), []).append(base)
            self._taa.setdefault(normalize(base, _TAA), []).append(base)
            self._maqsura.setdefault(fold_alif_maqsura(base), []).append(base)
        fingerprint = hashlib.sha256("\n".join(sorted(raw)).encode("utf-8")).hexdigest()[:12]
        self.backend_id = f"rule:{fingerprint}"

    def _surface_for(self, base: str) -> str | None:
        """The unique raw surface of a base form, or None when ambiguous."""
        surfaces = self._surfaces_by_base.get(base, [])
        return surfaces[0] if len(surfaces) == 1 else None

    def _fold_verdict(self, base: str) -> Verdict | None:
        checks = (
            (normalize(base, _HAMZA), self._hamza, ErrorTag.ORTH_HAMZA),
            (normalize(base, _TAA), self._taa, ErrorTag.ORTH_TAA),
            (fold_alif_maqsura(base), self._maqsura, ErrorTag.ORTH_ALIF_MAQSURA),
        )
        for folded, table, tag in checks:
            candidates = table.get(folded)
            if not candidates:
                continue
            if len(candidates) == 1:
                return Verdict(True, tag, self._surface_for(candidates[0]), ambiguous=False)
            return Verdict(True, tag, None, ambiguous=True)
        return None

    def _runon_verdict(self, base: str) -> Verdict | None:
        """The token is two lexicon words written without their space."""
        splits = [
            (base[:k], base[k:])
            for k in range(1, len(base))
            if base[:k] in self._bases and base[k:] in self._bases
        ]
        if not splits:
            return None
        if len(splits) == 1:
            left = self._surface_for(splits[0][0])
            right = self._surface_for(splits[0][1])
            if left and right:
                return Verdict(True, ErrorTag.MERGE, f"{left} {right}")
        return Verdict(True, ErrorTag.MERGE, None, ambiguous=True)

    def annotate(self, tokens: Sequence[Token]) -> list[Verdict]:
        verdicts: list[Verdict | None] = []
        bases: list[str] = []
        in_lex: list[bool] = []
        for tok in tokens:
            base = _base_form(tok.surface)
            bases.append(base)
            if tok.kind != WORD:
                in_lex.append(False)
                verdicts.append(Verdict(False))
                continue
            if base in self._bases:
                in_lex.append(True)
                verdicts.append(Verdict(False))
                continue
            in_lex.append(False)
            v = self._fold_verdict(base) or self._runon_verdict(base)
            verdicts.append(v)

        # Second pass: adjacent word pair whose concatenation is one lexicon
        # word (a space was inserted inside it).  Single-token rules win;
        # at least one half must be out of lexicon, so correct text whose
        # neighbors happen to concatenate into a word is never flagged.
        def unflagged(v: Verdict | None) -> bool:
            return v is None or not v.flagged

        i = 0
        while i < len(tokens) - 1:
            if (
                tokens[i].kind == WORD
                and tokens[i + 1].kind == WORD
                and unflagged(verdicts[i])
                and unflagged(verdicts[i + 1])
                and (not in_lex[i] or not in_lex[i + 1])
                and bases[i] + bases[i + 1] in self._bases
            ):
                surface = self._surface_for(bases[i] + bases[i + 1])
                pair = Verdict(True, ErrorTag.SPLIT, surface, ambiguous=surface is None)
                verdicts[i] = pair
                verdicts[i + 1] = pair
                i += 2
                continue
            i += 1

        return [v if v is not None else Verdict(False) for v in verdicts]


class ReferenceBackend(DetectorBackend):
    """Labels derived by aligning the input against a known correct version."""

    backend_id = "reference"

    def __init__(self, target_tokens: Sequence[Token]):
        self._target = list(target_tokens)

    def annotate(self, tokens: Sequence[Token]) -> list[Verdict]:
        return reference_verdicts(list(tokens), self._target)


def reference_verdicts(src_tokens: list[Token], tgt_tokens: list[Token]) -> list[Verdict]:
    """Per-source-token verdicts from an alignment with the target sequence."""
    src_surfaces = [t.surface for t in src_tokens]
    tgt_surfaces = [t.surface for t in tgt_tokens]
    verdicts: list[Verdict] = [Verdict(False)] * len(src_tokens)
    for al in align_tokens(src_tokens, tgt_tokens):
        if al.kind == MATCH:
            continue
        s0, s1 = al.src_range
        if s1 == s0:
            continue  # pure insertion: no source token to label
        gs, gt = group_texts(al, src_surfaces, tgt_surfaces)
        edits = char_edit_script(gs, gt)
        tag = derive_tag(al, edits, gs)
        v = Verdict(True, tag, gt if gt else None)
        for idx in range(s0, s1):
            verdicts[idx] = v
    return verdicts


class RemoteBackend(DetectorBackend):
    """HTTP detector: POST {tokens: [...]} -> {flags, tags, suggestions}.

    An optional ``confidences`` array in the response is passed through;
    transport errors, timeouts, and malformed replies all surface as
    BackendUnavailableError.
    """

    def __init__(self, endpoint: str, timeout: float = 5.0):
        self.endpoint = endpoint
        self.timeout = timeout
        self.backend_id = f"remote:{endpoint}"

    def annotate(self, tokens: Sequence[Token]) -> list[Verdict]:
        try:
            resp = requests.post(
                self.endpoint,
                json={"tokens": [t.surface for t in tokens]},
                timeout=self.timeout,
            )
            resp.raise_for_status()
            data = resp.json()
            flags = list(data["flags"])
            tags = list(data["tags"])
            suggestions = list(data["suggestions"])
            confidences = list(data.get("confidences") or [1.0] * len(tokens))
        except (requests.RequestException, ValueError, KeyError, TypeError) as exc:
            raise BackendUnavailableError(f"detector endpoint {self.endpoint}: {exc}") from exc
        if not (len(flags) == len(tags) == len(suggestions) == len(confidences) == len(tokens)):
            raise BackendUnavailableError(
                f"detector endpoint {self.endpoint}: response arrays do not match token count")
        return [
            Verdict(bool(f), parse_tag(str(t)), s if isinstance(s, str) else None, float(c))
            for f, t, s, c in zip(flags, tags, suggestions, confidences)
        ]


def detect_binary(tokens: Sequence[Token], backend: DetectorBackend) -> list[bool]:
    """Stage 1: one boolean per token."""
    if not tokens:
        raise ValidationError("detect_binary needs at least one token")
    return [v.flagged for v in backend.annotate(tokens)]


def classify_flagged(tokens: Sequence[Token], flags: Sequence[bool], backend: DetectorBackend) -> list[ErrorTag]:
    """Stage 2: tags masked by the stage-1 flags the caller provides."""
    if len(flags) != len(tokens):
        raise ValidationError(f"{len(flags)} flags for {len(tokens)} tokens")
    verdicts = backend.annotate(tokens)
    tags: list[ErrorTag] = []
    for flag, v in zip(flags, verdicts):
        if not flag:
            tags.append(ErrorTag.OK)
        elif v.tag is ErrorTag.OK:
            tags.append(ErrorTag.UNK)
        else:
            tags.append(v.tag)
    return tags


def _label(index: int, flagged: bool, v: Verdict) -> TokenLabel:
    if not flagged:
        return TokenLabel(index, False, ErrorTag.OK, None, "", v.confidence)
    tag = v.tag if v.tag is not ErrorTag.OK else ErrorTag.UNK
    hint = HINTS[tag] + (AMBIGUOUS_SUFFIX if v.ambiguous else "")
    return TokenLabel(index, True, tag, v.suggestion, hint, v.confidence)


def run_cascade(tokens: Sequence[Token], backend: DetectorBackend) -> list[TokenLabel]:
    """Both stages composed, with suggestions, hints, and confidences attached."""
    if not tokens:
        raise ValidationError("run_cascade needs at least one token")
    verdicts = backend.annotate(tokens)
    return [_label(i, v.flagged, v) for i, v in enumerate(verdicts)]


def labels_from_reference(src_tokens: list[Token], tgt_tokens: list[Token]) -> list[TokenLabel]:
    """Deterministic oracle labels for a (written, corrected) token pair."""
    verdicts = reference_verdicts(src_tokens, tgt_tokens)
    return [_label(i, v.flagged, v) for i, v in enumerate(verdicts)]
