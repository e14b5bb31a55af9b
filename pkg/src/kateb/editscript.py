"""Character-level edit scripts and token alignment between a text and its correction.

The two layers:

* ``align_tokens`` pairs source tokens with target tokens (match, substitute,
  insert, delete, and the fused split / merge groups);
* ``char_edit_script`` spells out each changed group as minimal character
  edits (unit costs, deterministic tie-break).

Edit positions index into the *group's source text* (scalar indices) and the
edit list is ordered so a single left-to-right pass applies it.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .errors import MalformedScriptError, ValidationError
from .tags import ErrorTag
from .textcore import (
    ALIF_MAQSURA_PAIR,
    HAMZA_FAMILY,
    LONG_VOWEL_LETTERS,
    TAA_PAIR,
    Token,
    join_tokens,
    tokenize,
)

# Alignment kinds.
MATCH = "match"
SUBSTITUTE = "substitute"
INSERT = "insert"
DELETE = "delete"
SPLIT = "split"    # one source token maps to several target tokens
MERGE = "merge"    # several source tokens map to one target token

# Char edit ops.
OP_SUBSTITUTE = "substitute"
OP_INSERT = "insert"
OP_DELETE = "delete"

# Fused split/merge groups are searched up to this many primitive cells.
_MAX_FUSE_WINDOW = 8

_EPS = 1e-9


@dataclass(frozen=True)
class TokenAlignment:
    """One aligned group: half-open token index ranges on both sides."""

    src_range: tuple[int, int]
    tgt_range: tuple[int, int]
    kind: str

    def to_dict(self) -> dict:
        return {"src_range": list(self.src_range), "tgt_range": list(self.tgt_range), "kind": self.kind}

    @classmethod
    def from_dict(cls, d: dict) -> "TokenAlignment":
        return cls(tuple(d["src_range"]), tuple(d["tgt_range"]), d["kind"])


@dataclass(frozen=True)
class CharEdit:
    """One character operation.

    ``pos`` is a scalar index into the group's source text.  ``char`` is the
    replacement / inserted scalar, absent (None) for deletions.
    """

    op: str
    pos: int
    char: str | None = None

    def to_dict(self) -> dict:
        d: dict = {"op": self.op, "pos": self.pos}
        if self.char is not None:
            d["char"] = self.char
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CharEdit":
        return cls(d["op"], int(d["pos"]), d.get("char"))


@dataclass(frozen=True)
class EditGroup:
    alignment: TokenAlignment
    edits: tuple[CharEdit, ...]

    def to_dict(self) -> dict:
        return {"alignment": self.alignment.to_dict(), "edits": [e.to_dict() for e in self.edits]}

    @classmethod
    def from_dict(cls, d: dict) -> "EditGroup":
        return cls(
            TokenAlignment.from_dict(d["alignment"]),
            tuple(CharEdit.from_dict(e) for e in d["edits"]),
        )


@dataclass(frozen=True)
class EditScript:
    """Ordered group list covering the whole source token sequence.

    An empty script (no groups) is the identity transformation.
    """

    groups: tuple[EditGroup, ...] = ()

    def to_dict(self) -> dict:
        return {"groups": [g.to_dict() for g in self.groups]}

    @classmethod
    def from_dict(cls, d: dict) -> "EditScript":
        return cls(tuple(EditGroup.from_dict(g) for g in d["groups"]))


def levenshtein(a: str, b: str) -> int:
    """Plain unit-cost edit distance (two-row DP)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a):
        cur = [i + 1]
        for j, cb in enumerate(b):
            cur.append(min(prev[j] + (ca != cb), prev[j + 1] + 1, cur[j] + 1))
        prev = cur
    return prev[-1]


def char_edit_script(src: str, tgt: str) -> list[CharEdit]:
    """Minimal character edits turning ``src`` into ``tgt``.

    Unit costs; ties resolved by preferring substitute over delete over
    insert, leftmost first, which makes the script unique.  The edit count
    always equals the Levenshtein distance.
    """
    n, m = len(src), len(tgt)
    # dist[i][j] = edit distance between src[i:] and tgt[j:], so the walk
    # below can run forward and emit edits already ordered left to right.
    dist = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dist[i][m] = n - i
    for j in range(m + 1):
        dist[n][j] = m - j
    for i in range(n - 1, -1, -1):
        row = dist[i]
        nxt = dist[i + 1]
        for j in range(m - 1, -1, -1):
            best = nxt[j + 1] + (src[i] != tgt[j])
            if nxt[j] + 1 < best:
                best = nxt[j] + 1
            if row[j + 1] + 1 < best:
                best = row[j + 1] + 1
            row[j] = best

    edits: list[CharEdit] = []
    i = j = 0
    while i < n or j < m:
        if i < n and j < m and src[i] == tgt[j] and dist[i][j] == dist[i + 1][j + 1]:
            i += 1
            j += 1
        elif i < n and j < m and dist[i][j] == dist[i + 1][j + 1] + 1:
            edits.append(CharEdit(OP_SUBSTITUTE, i, tgt[j]))
            i += 1
            j += 1
        elif i < n and dist[i][j] == dist[i + 1][j] + 1:
            edits.append(CharEdit(OP_DELETE, i))
            i += 1
        else:
            edits.append(CharEdit(OP_INSERT, i, tgt[j]))
            j += 1
    return edits


def apply_char_edits(src: str, edits: list[CharEdit] | tuple[CharEdit, ...]) -> str:
    """Apply a char edit list to a group source string.

    Edits must be ordered by position (inserts before a substitute/delete at
    the same position).  Any out-of-range or out-of-order edit raises
    MalformedScriptError.
    """
    out: list[str] = []
    idx = 0  # next source scalar to copy
    for e in edits:
        if e.pos < idx or e.pos > len(src):
            raise MalformedScriptError(f"edit position {e.pos} out of range for group of length {len(src)}")
        out.append(src[idx:e.pos])
        idx = e.pos
        if e.op == OP_INSERT:
            if e.char is None:
                raise MalformedScriptError("insert edit without a character")
            out.append(e.char)
        elif e.op == OP_SUBSTITUTE:
            if e.char is None:
                raise MalformedScriptError("substitute edit without a character")
            if idx >= len(src):
                raise MalformedScriptError(f"substitute at {e.pos} beyond group end")
            out.append(e.char)
            idx += 1
        elif e.op == OP_DELETE:
            if idx >= len(src):
                raise MalformedScriptError(f"delete at {e.pos} beyond group end")
            idx += 1
        else:
            raise MalformedScriptError(f"unknown edit op {e.op!r}")
    out.append(src[idx:])
    return "".join(out)


def _sub_cost(a: str, b: str) -> float:
    if a == b:
        return 0.0
    return levenshtein(a, b) / max(len(a), len(b))


def align_tokens(src_tokens: list[Token], tgt_tokens: list[Token]) -> list[TokenAlignment]:
    """Align source tokens to target tokens.

    Token-level edit-distance DP whose substitution cost is the normalized
    character edit distance of the two surfaces; inserts and deletes cost 1.
    A post-pass fuses adjacent cells into merge (n -> 1) or split (1 -> n)
    groups when the concatenated surfaces are exactly equal.
    """
    return align_surfaces([t.surface for t in src_tokens], [t.surface for t in tgt_tokens])


def align_surfaces(a: list[str], b: list[str]) -> list[TokenAlignment]:
    n, m = len(a), len(b)
    dist = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dist[i][m] = float(n - i)
    for j in range(m + 1):
        dist[n][j] = float(m - j)
    for i in range(n - 1, -1, -1):
        row = dist[i]
        nxt = dist[i + 1]
        for j in range(m - 1, -1, -1):
            best = nxt[j + 1] + _sub_cost(a[i], b[j])
            if nxt[j] + 1.0 < best:
                best = nxt[j] + 1.0
            if row[j + 1] + 1.0 < best:
                best = row[j + 1] + 1.0
            row[j] = best

    # Forward walk, preferring diagonal, then delete, then insert.
    cells: list[TokenAlignment] = []
    i = j = 0
    while i < n or j < m:
        if i < n and j < m and abs(dist[i][j] - (dist[i + 1][j + 1] + _sub_cost(a[i], b[j]))) < _EPS:
            kind = MATCH if a[i] == b[j] else SUBSTITUTE
            cells.append(TokenAlignment((i, i + 1), (j, j + 1), kind))
            i += 1
            j += 1
        elif i < n and abs(dist[i][j] - (dist[i + 1][j] + 1.0)) < _EPS:
            cells.append(TokenAlignment((i, i + 1), (j, j), DELETE))
            i += 1
        else:
            cells.append(TokenAlignment((i, i), (j, j + 1), INSERT))
            j += 1

    return _fuse_cells(cells, a, b)


def _fuse_cells(cells: list[TokenAlignment], a: list[str], b: list[str]) -> list[TokenAlignment]:
    """Fuse runs of primitive cells into split/merge groups on exact concat equality."""
    out: list[TokenAlignment] = []
    k = 0
    while k < len(cells):
        fused: TokenAlignment | None = None
        width = 1
        for w in range(min(_MAX_FUSE_WINDOW, len(cells) - k), 1, -1):
            window = cells[k:k + w]
            s0 = window[0].src_range[0]
            s1 = window[-1].src_range[1]
            t0 = window[0].tgt_range[0]
            t1 = window[-1].tgt_range[1]
            ns, nt = s1 - s0, t1 - t0
            if not ((ns >= 2 and nt == 1) or (ns == 1 and nt >= 2)):
                continue
            if "".join(a[s0:s1]) != "".join(b[t0:t1]):
                continue
            fused = TokenAlignment((s0, s1), (t0, t1), MERGE if ns >= 2 else SPLIT)
            width = w
            break
        if fused is not None:
            out.append(fused)
            k += width
        else:
            out.append(cells[k])
            k += 1
    return out


def group_texts(alignment: TokenAlignment, src_surfaces: list[str], tgt_surfaces: list[str]) -> tuple[str, str]:
    """Space-joined source and target strings of one alignment group."""
    s0, s1 = alignment.src_range
    t0, t1 = alignment.tgt_range
    return " ".join(src_surfaces[s0:s1]), " ".join(tgt_surfaces[t0:t1])


def build_script(src_surfaces: list[str], tgt_surfaces: list[str]) -> EditScript:
    """Full edit script: align the token sequences and extract char edits per group."""
    groups: list[EditGroup] = []
    for al in align_surfaces(src_surfaces, tgt_surfaces):
        gs, gt = group_texts(al, src_surfaces, tgt_surfaces)
        if al.kind == MATCH:
            groups.append(EditGroup(al, ()))
        else:
            groups.append(EditGroup(al, tuple(char_edit_script(gs, gt))))
    return EditScript(tuple(groups))


def apply_script(src_text: str, script: EditScript) -> str:
    """Apply a script to source text, returning the corrected text.

    The empty script is the identity.  Otherwise the script's groups must
    cover the tokenized source exactly, in order; the output joins target
    tokens with single spaces and no space before punctuation.
    """
    if not script.groups:
        return src_text
    tokens = tokenize(src_text)
    surfaces = [t.surface for t in tokens]
    expect_src = 0
    expect_tgt = 0
    emitted: list[str] = []
    for g in script.groups:
        s0, s1 = g.alignment.src_range
        t0, t1 = g.alignment.tgt_range
        if s0 != expect_src or s1 < s0 or s1 > len(surfaces):
            raise MalformedScriptError(
                f"group source range ({s0}, {s1}) does not continue at token {expect_src} of {len(surfaces)}")
        if t0 != expect_tgt or t1 < t0:
            raise MalformedScriptError(f"group target range ({t0}, {t1}) does not continue at {expect_tgt}")
        expect_src = s1
        expect_tgt = t1
        group_src = " ".join(surfaces[s0:s1])
        if g.alignment.kind == MATCH and g.edits:
            raise MalformedScriptError("match group carries edits")
        group_tgt = apply_char_edits(group_src, g.edits)
        emitted.extend(part for part in group_tgt.split(" ") if part)
    if expect_src != len(surfaces):
        raise MalformedScriptError(f"script covers {expect_src} of {len(surfaces)} source tokens")
    return join_tokens(emitted)


def _common_prefix_len(a: str, b: str) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def _shares_stem(src: str, tgt: str) -> bool:
    # Affix change: at least 3 scalars survive unchanged at one edge while
    # the other edge differs.
    if not src or not tgt or src == tgt:
        return False
    prefix = _common_prefix_len(src, tgt)
    suffix = _common_prefix_len(src[::-1], tgt[::-1])
    return prefix >= 3 or suffix >= 3


def derive_tag(alignment: TokenAlignment, edits: list[CharEdit] | tuple[CharEdit, ...], group_src: str) -> ErrorTag:
    """Error tag for one changed group, decided by a fixed rule ladder.

    ``group_src`` is the group's space-joined source text, needed to read
    the scalars a substitute or delete touches.
    """
    if alignment.kind == MATCH:
        raise ValidationError("derive_tag called on a match group")
    if alignment.kind == MERGE:
        return ErrorTag.SPLIT      # one word was written as several
    if alignment.kind == SPLIT:
        return ErrorTag.MERGE      # several words were written as one
    if not edits:
        return ErrorTag.UNK

    touched: set[str] = set()
    all_inserts = True
    for e in edits:
        if e.op == OP_INSERT:
            touched.add(e.char)
        else:
            all_inserts = False
            if e.pos < len(group_src):
                touched.add(group_src[e.pos])
            if e.op == OP_SUBSTITUTE and e.char is not None:
                touched.add(e.char)

    if touched <= HAMZA_FAMILY:
        return ErrorTag.ORTH_HAMZA
    if touched <= TAA_PAIR:
        return ErrorTag.ORTH_TAA
    if touched <= ALIF_MAQSURA_PAIR:
        return ErrorTag.ORTH_ALIF_MAQSURA
    if all_inserts and touched <= LONG_VOWEL_LETTERS:
        return ErrorTag.ORTH_VOWEL
    if touched and all(unicodedata.category(c)[0] in ("P", "S") for c in touched):
        return ErrorTag.PUNCT
    if _shares_stem(group_src, apply_char_edits(group_src, edits)):
        return ErrorTag.MORPH
    return ErrorTag.UNK
