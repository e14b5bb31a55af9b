"""Leveled writing prompts: validation, filtering, and the default seed set."""

from __future__ import annotations

import uuid
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import AlreadySeededError, NotFoundError, ParseError, ValidationError
from .scoring import CefrLevel, min_words_for, parse_level

GENRES = frozenset({"formal", "informal"})

_SEED_FILE = Path(__file__).parent / "data" / "default_prompts.txt"


@dataclass(frozen=True)
class Prompt:
    id: str
    level: CefrLevel
    topic: str
    genre: str
    body_ar: str
    min_words: int
    body_en: str | None = None
    media_ref: str | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "level": self.level.name,
            "topic": self.topic,
            "genre": self.genre,
            "body_ar": self.body_ar,
            "min_words": self.min_words,
            "body_en": self.body_en,
            "media_ref": self.media_ref,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Prompt":
        return cls(
            id=d["id"],
            level=parse_level(d["level"]),
            topic=d["topic"],
            genre=d["genre"],
            body_ar=d["body_ar"],
            min_words=int(d["min_words"]),
            body_en=d.get("body_en"),
            media_ref=d.get("media_ref"),
        )


@dataclass(frozen=True)
class PromptFilter:
    level: CefrLevel | None = None
    topic: str | None = None
    genre: str | None = None

    def matches(self, p: Prompt) -> bool:
        if self.level is not None and p.level is not self.level:
            return False
        if self.topic is not None and self.topic.casefold() not in p.topic.casefold():
            return False
        if self.genre is not None and p.genre != self.genre:
            return False
        return True


class PromptStore:
    """In-memory prompt map with an optional persistence hook per added prompt."""

    def __init__(self, on_add: Callable[[Prompt], None] | None = None):
        self._prompts: dict[str, Prompt] = {}
        self._on_add = on_add

    def __len__(self) -> int:
        return len(self._prompts)

    def restore(self, prompt: Prompt) -> None:
        """Load an already-persisted prompt without re-firing the hook."""
        self._prompts[prompt.id] = prompt

    def add(self, prompt: Prompt) -> str:
        if prompt.id and prompt.id in self._prompts:
            raise ValidationError(f"prompt id {prompt.id!r} already exists")
        if prompt.genre not in GENRES:
            raise ValidationError(f"genre must be one of {sorted(GENRES)}")
        if not prompt.body_ar.strip():
            raise ValidationError("body_ar must not be empty")
        if prompt.min_words != min_words_for(prompt.level):
            raise ValidationError(
                f"min_words for {prompt.level.name} must be {min_words_for(prompt.level)}")
        if not prompt.id:
            prompt = Prompt(
                id=uuid.uuid4().hex,
                level=prompt.level,
                topic=prompt.topic,
                genre=prompt.genre,
                body_ar=prompt.body_ar,
                min_words=prompt.min_words,
                body_en=prompt.body_en,
                media_ref=prompt.media_ref,
            )
        self._prompts[prompt.id] = prompt
        if self._on_add is not None:
            self._on_add(prompt)
        return prompt.id

    def get(self, prompt_id: str) -> Prompt:
        try:
            return self._prompts[prompt_id]
        except KeyError:
            raise NotFoundError(f"no prompt {prompt_id!r}") from None

    def list(self, flt: PromptFilter | None = None) -> list[Prompt]:
        """All matching prompts, ordered by (level, id) for stable output."""
        flt = flt or PromptFilter()
        found = [p for p in self._prompts.values() if flt.matches(p)]
        found.sort(key=lambda p: (p.level.value, p.id))
        return found

    def seed_defaults(self) -> list[Prompt]:
        """Insert the packaged starter prompts into an empty store."""
        if self._prompts:
            raise AlreadySeededError("prompt store already has prompts")
        seeds = load_seed_file(_SEED_FILE)
        for p in seeds:
            self.add(p)
        return seeds


def load_seed_file(path: str | Path) -> list[Prompt]:
    """Parse the plain-text seed format: key:value lines, blank-line separated records."""
    prompts: list[Prompt] = []
    record: dict[str, str] = {}
    record_line = 0

    def close(at_line: int) -> None:
        nonlocal record, record_line
        if not record:
            return
        try:
            level = parse_level(record["level"])
            prompts.append(Prompt(
                id=record["id"],
                level=level,
                topic=record["topic"],
                genre=record["genre"],
                body_ar=record["body_ar"],
                min_words=int(record.get("min_words", min_words_for(level))),
                body_en=record.get("body_en"),
                media_ref=record.get("media_ref"),
            ))
        except (KeyError, ValueError, ValidationError) as exc:
            raise ParseError(f"bad prompt record: {exc}", record_line or at_line) from exc
        record = {}
        record_line = 0

    lines = Path(path).read_text(encoding="utf-8").splitlines()
    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            close(no)
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", no)
        key, value = line.split(":", 1)
        if not record:
            record_line = no
        record[key.strip()] = value.strip()
    close(len(lines))
    return prompts


def seed_prompts(store: PromptStore) -> list[Prompt]:
    return store.seed_defaults()
