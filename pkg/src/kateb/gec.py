"""Correction synthesis: turn cascade labels into a corrected text plus edit script."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .editscript import (
    DELETE,
    MATCH,
    MERGE,
    SPLIT,
    SUBSTITUTE,
    CharEdit,
    EditGroup,
    EditScript,
    TokenAlignment,
    char_edit_script,
)
from .ged import DetectorBackend, run_cascade
from .tags import ErrorTag, TokenLabel
from .textcore import NormProfile, Token, join_tokens, normalize

_BASE = NormProfile.base()


@dataclass(frozen=True)
class CorrectionResult:
    corrected_text: str
    script: EditScript
    labels: tuple[TokenLabel, ...]


def _is_split_pair(tokens: Sequence[Token], labels: Sequence[TokenLabel], i: int) -> bool:
    """Tokens i and i+1 carry one SPLIT repair: join them into the suggestion."""
    if i + 1 >= len(tokens):
        return False
    a, b = labels[i], labels[i + 1]
    if not (a.flagged and b.flagged and a.tag is ErrorTag.SPLIT and b.tag is ErrorTag.SPLIT):
        return False
    if not a.suggestion or a.suggestion != b.suggestion:
        return False
    joined = normalize(tokens[i].surface, _BASE) + normalize(tokens[i + 1].surface, _BASE)
    return joined == normalize(a.suggestion, _BASE)


def correct(tokens: Sequence[Token], backend: DetectorBackend) -> CorrectionResult:
    """Run the cascade and apply every suggestion it produced.

    Tokens without a suggestion pass through unchanged (flagged or not).
    A suggestion containing spaces expands one token into several; two
    adjacent SPLIT-tagged tokens sharing one suggestion collapse into it.
    The returned text joins tokens with single spaces, none before
    punctuation.
    """
    labels = run_cascade(tokens, backend)
    groups: list[EditGroup] = []
    out_surfaces: list[str] = []
    i = 0
    j = 0  # next target token index
    while i < len(tokens):
        lab = labels[i]
        surface = tokens[i].surface
        if _is_split_pair(tokens, labels, i):
            group_src = f"{surface} {tokens[i + 1].surface}"
            target = labels[i].suggestion or ""
            al = TokenAlignment((i, i + 2), (j, j + 1), MERGE)
            groups.append(EditGroup(al, tuple(char_edit_script(group_src, target))))
            out_surfaces.append(target)
            i += 2
            j += 1
            continue
        if lab.flagged and lab.suggestion is not None and lab.suggestion != surface:
            parts = [p for p in lab.suggestion.split(" ") if p]
            if not parts:
                al = TokenAlignment((i, i + 1), (j, j), DELETE)
            elif len(parts) == 1:
                al = TokenAlignment((i, i + 1), (j, j + 1), SUBSTITUTE)
            else:
                al = TokenAlignment((i, i + 1), (j, j + len(parts)), SPLIT)
            groups.append(EditGroup(al, tuple(char_edit_script(surface, " ".join(parts)))))
            out_surfaces.extend(parts)
            i += 1
            j += len(parts)
            continue
        groups.append(EditGroup(TokenAlignment((i, i + 1), (j, j + 1), MATCH), ()))
        out_surfaces.append(surface)
        i += 1
        j += 1

    if all(g.alignment.kind == MATCH for g in groups):
        script = EditScript(())  # identity: no repairs accepted
    else:
        script = EditScript(tuple(groups))
    return CorrectionResult(join_tokens(out_surfaces), script, tuple(labels))
