"""Corpus selection and export: M2 and JSONL, reproducible byte for byte."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

from .editscript import MATCH, EditScript, apply_script, build_script, derive_tag
from .errors import KatebError, ParseError, ValidationError
from .store import DataStore, dumps
from .tags import ErrorTag, TokenLabel
from .textcore import count_words, tokenize

_ANON_SALT = "corpus-anon:"


def anon_user_key(user_id: str) -> str:
    """Stable one-way key: same user maps to the same key, raw id never leaves."""
    return hashlib.sha256((_ANON_SALT + user_id).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class SelectionConfig:
    require_multiple_revisions: bool = False
    require_improvement: bool = False
    min_words: int = 50
    max_words: int = 600

    def __post_init__(self) -> None:
        if self.min_words > self.max_words:
            raise ValidationError("min_words must not exceed max_words")
        if self.min_words < 0:
            raise ValidationError("min_words must be >= 0")


@dataclass(frozen=True)
class CorpusRecord:
    source_text: str
    corrected_text: str
    labels: tuple[TokenLabel, ...]
    script: EditScript
    meta: dict

    def to_dict(self) -> dict:
        return {
            "source_text": self.source_text,
            "corrected_text": self.corrected_text,
            "labels": [lab.to_dict() for lab in self.labels],
            "script": self.script.to_dict(),
            "meta": dict(self.meta),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusRecord":
        return cls(
            source_text=d["source_text"],
            corrected_text=d["corrected_text"],
            labels=tuple(TokenLabel.from_dict(x) for x in d["labels"]),
            script=EditScript.from_dict(d["script"]),
            meta=dict(d["meta"]),
        )


_LEVEL_ORDER = {"A1": 1, "A2": 2, "B1": 3, "B2": 4, "C1": 5, "C2": 6}


def _improved(first: dict, last: dict) -> bool:
    f1, f2 = first["feedback"], last["feedback"]
    if f2["error_count"] < f1["error_count"]:
        return True
    return _LEVEL_ORDER.get(f2["cefr"], 0) > _LEVEL_ORDER.get(f1["cefr"], 0)


def build_record(submission: dict, essay: dict, user: dict) -> CorpusRecord:
    """One export record from a stored submission; re-verifies the script."""
    source = submission["text"]
    feedback = submission["feedback"]
    corrected = feedback["corrected_text"]
    if corrected == source:
        script = EditScript(())
    else:
        src_surfaces = [t.surface for t in tokenize(source)]
        tgt_surfaces = [t.surface for t in tokenize(corrected)]
        script = build_script(src_surfaces, tgt_surfaces)
    rendered = apply_script(source, script)
    if rendered != corrected:
        raise KatebError(
            f"script round-trip failed for essay {essay['essay_id']} rev {submission['revision_no']}")
    labels = tuple(TokenLabel.from_dict(lab) for lab in feedback["labels"])
    meta = {
        "anon_user_key": anon_user_key(essay["user_id"]),
        "prompt_id": essay["prompt_id"],
        "level": feedback["cefr"],
        "revision_no": submission["revision_no"],
        "config_id": feedback["config_id"],
    }
    if user.get("native_language"):
        meta["native_language"] = user["native_language"]
    return CorpusRecord(source, corrected, labels, script, meta)


def select_candidates(store: DataStore, config: SelectionConfig) -> list[CorpusRecord]:
    """Filter essays by revision-count / improvement predicates, then bound words per revision.

    Tightening any predicate can only shrink the result set.
    """
    records: list[CorpusRecord] = []
    for essay_id, essay in store.essays.items():
        revisions = store.get_submissions(essay_id)
        if not revisions:
            continue
        if config.require_multiple_revisions and len(revisions) < 2:
            continue
        if config.require_improvement and not _improved(revisions[0], revisions[-1]):
            continue
        user = store.users.get(essay["user_id"], {})
        for sub in revisions:
            wc = count_words(tokenize(sub["text"]))
            if not (config.min_words <= wc <= config.max_words):
                continue
            records.append(build_record(sub, essay, user))
    return records


# -- M2 ------------------------------------------------------------------


@dataclass(frozen=True)
class M2Edit:
    start: int
    end: int
    tag: str
    correction: str


@dataclass(frozen=True)
class M2Entry:
    source_tokens: tuple[str, ...]
    edits: tuple[M2Edit, ...]


def record_m2_edits(record: CorpusRecord) -> list[M2Edit]:
    """Annotation lines for one record, one per changed alignment group."""
    src_surfaces = [t.surface for t in tokenize(record.source_text)]
    tgt_surfaces = [t.surface for t in tokenize(record.corrected_text)]
    label_by_index = {lab.token_index: lab for lab in record.labels if lab.flagged}
    edits: list[M2Edit] = []
    for group in record.script.groups:
        if group.alignment.kind == MATCH:
            continue
        s0, s1 = group.alignment.src_range
        t0, t1 = group.alignment.tgt_range
        correction = " ".join(tgt_surfaces[t0:t1])
        label = label_by_index.get(s0) if s1 > s0 else None
        if label is not None:
            tag = label.tag
        else:
            tag = derive_tag(group.alignment, group.edits, " ".join(src_surfaces[s0:s1]))
        edits.append(M2Edit(s0, s1, tag.value, correction))
    return edits


def format_m2(records: list[CorpusRecord]) -> str:
    """Render records in the annotation interchange format."""
    blocks: list[str] = []
    for rec in records:
        src_tokens = [t.surface for t in tokenize(rec.source_text)]
        lines = ["S " + " ".join(src_tokens)]
        for e in record_m2_edits(rec):
            lines.append(f"A {e.start} {e.end}|||{e.tag}|||{e.correction}|||REQUIRED|||-NONE-|||0")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def export_m2(records: list[CorpusRecord], path: str | Path) -> None:
    Path(path).write_text(format_m2(records), encoding="utf-8")


def parse_m2(text: str) -> list[M2Entry]:
    """Parse the M2 format back into entries; malformed lines raise ParseError."""
    entries: list[M2Entry] = []
    tokens: tuple[str, ...] | None = None
    edits: list[M2Edit] = []

    def close() -> None:
        nonlocal tokens, edits
        if tokens is not None:
            entries.append(M2Entry(tokens, tuple(edits)))
        tokens = None
        edits = []

    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            close()
            continue
        if line.startswith("S ") or line == "S":
            close()
            tokens = tuple(line[2:].split(" ")) if len(line) > 2 else ()
            continue
        if line.startswith("A "):
            if tokens is None:
                raise ParseError("annotation before any source line", no)
            body = line[2:]
            parts = body.split("|||")
            if len(parts) != 6:
                raise ParseError(f"expected 6 fields, got {len(parts)}", no)
            span = parts[0].split()
            if len(span) != 2:
                raise ParseError(f"bad span {parts[0]!r}", no)
            try:
                start, end = int(span[0]), int(span[1])
            except ValueError:
                raise ParseError(f"non-integer span {parts[0]!r}", no) from None
            if start < 0 or end < start or end > len(tokens):
                raise ParseError(f"span ({start}, {end}) outside source of {len(tokens)} tokens", no)
            if not parts[1]:
                raise ParseError("empty tag", no)
            edits.append(M2Edit(start, end, parts[1], parts[2]))
            continue
        raise ParseError(f"unrecognized line {line!r}", no)
    close()
    return entries


def parse_m2_file(path: str | Path) -> list[M2Entry]:
    return parse_m2(Path(path).read_text(encoding="utf-8"))


# -- JSONL ---------------------------------------------------------------


def format_jsonl(records: list[CorpusRecord]) -> str:
    return "".join(dumps(rec.to_dict()) + "\n" for rec in records)


def export_jsonl(records: list[CorpusRecord], path: str | Path) -> None:
    Path(path).write_text(format_jsonl(records), encoding="utf-8")


def parse_jsonl(path: str | Path) -> list[CorpusRecord]:
    import json

    records: list[CorpusRecord] = []
    for no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(CorpusRecord.from_dict(json.loads(line)))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad record: {exc}", no) from exc
    return records
