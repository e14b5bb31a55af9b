"""Append-oriented embedded persistence.

Every state change is one JSON line in ``events.jsonl`` under the data
directory.  Startup replays the log into memory; nothing is ever rewritten
in place, so stored submissions are immutable by construction.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Callable, Iterator

from .errors import NotFoundError, ValidationError
from .prompts import Prompt, PromptStore


def dumps(obj: dict) -> str:
    """Canonical JSON: sorted keys, compact, raw UTF-8."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


class EventLog:
    def __init__(self, path: Path):
        self.path = path
        self._lock = threading.Lock()
        path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, record: dict) -> None:
        line = dumps(record) + "\n"
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line)
                fh.flush()
                os.fsync(fh.fileno())

    def replay(self) -> Iterator[dict]:
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield json.loads(line)


class DataStore:
    """All service state, keyed in memory and journaled to the event log."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.log = EventLog(self.data_dir / "events.jsonl")
        self.lock = threading.RLock()
        self.users: dict[str, dict] = {}
        self.essays: dict[str, dict] = {}
        self.submissions: dict[str, list[dict]] = {}
        self.prompts = PromptStore(on_add=self._persist_prompt)
        self._replaying = False
        self._replay()

    # -- replay ----------------------------------------------------------

    def _replay(self) -> None:
        self._replaying = True
        try:
            for event in self.log.replay():
                kind = event.get("kind")
                data = event.get("data", {})
                if kind == "user":
                    self.users.setdefault(data["user_id"], {}).update(data)
                elif kind == "essay":
                    self.essays[data["essay_id"]] = data
                elif kind == "submission":
                    self.submissions.setdefault(data["essay_id"], []).append(data)
                elif kind == "prompt":
                    self.prompts.restore(Prompt.from_dict(data))
                # unknown kinds are skipped so old logs stay readable
        finally:
            self._replaying = False

    def _persist_prompt(self, prompt: Prompt) -> None:
        if not self._replaying:
            self.log.append({"kind": "prompt", "data": prompt.to_dict()})

    # -- users -----------------------------------------------------------

    def put_user(self, record: dict) -> dict:
        with self.lock:
            merged = {**self.users.get(record["user_id"], {}), **record}
            self.log.append({"kind": "user", "data": merged})
            self.users[merged["user_id"]] = merged
            return merged

    def get_user(self, user_id: str) -> dict:
        try:
            return self.users[user_id]
        except KeyError:
            raise NotFoundError(f"no user {user_id!r}") from None

    # -- essays ----------------------------------------------------------

    def add_essay(self, record: dict) -> dict:
        with self.lock:
            if record["essay_id"] in self.essays:
                raise ValidationError(f"essay {record['essay_id']!r} already exists")
            self.log.append({"kind": "essay", "data": record})
            self.essays[record["essay_id"]] = record
            return record

    def get_essay(self, essay_id: str) -> dict:
        try:
            return self.essays[essay_id]
        except KeyError:
            raise NotFoundError(f"no essay {essay_id!r}") from None

    # -- submissions -----------------------------------------------------

    def append_submission(self, essay_id: str, make_record: Callable[[int], dict]) -> dict:
        """Atomically claim the next revision number and journal the record.

        ``make_record`` receives the 1-based revision number; the lock is
        held across claim and append, so concurrent checks on one essay can
        neither skip nor duplicate a number.
        """
        with self.lock:
            revs = self.submissions.setdefault(essay_id, [])
            record = make_record(len(revs) + 1)
            self.log.append({"kind": "submission", "data": record})
            revs.append(record)
            return record

    def get_submissions(self, essay_id: str) -> list[dict]:
        return list(self.submissions.get(essay_id, []))

    def get_revision(self, essay_id: str, revision_no: int) -> dict:
        for rec in self.submissions.get(essay_id, []):
            if rec["revision_no"] == revision_no:
                return rec
        raise NotFoundError(f"essay {essay_id!r} has no revision {revision_no}")

    def total_submissions(self) -> int:
        return sum(len(v) for v in self.submissions.values())
