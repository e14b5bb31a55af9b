"""Session service: users, essays, the checking pipeline, progress, and diffs."""

from __future__ import annotations

import datetime as _dt
import os
import uuid
from dataclasses import dataclass
from pathlib import Path

from .editscript import apply_script
from .errors import UnscorableInputError, ValidationError
from .gec import correct
from .ged import BackendUnavailableError, DetectorBackend, RemoteBackend, RuleBackend, load_lexicon
from .scoring import (
    RemoteScorer,
    ScoringConfig,
    default_scoring_config,
    extract_features,
    load_scoring_config,
    parse_level,
    score,
)
from .store import DataStore
from .textcore import Token, count_words, split_sentences, tokenize

LOCALES = frozenset({"ar", "en"})

_PROFILE_FIELDS = ("native_language", "dialect", "self_level", "locale")

_DEFAULT_LEXICON = Path(__file__).parent / "data" / "seed_lexicon.txt"


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: str = "./data"
    lexicon_path: str | None = None
    scoring_config_path: str | None = None
    port: int = 8000
    detector_endpoint: str | None = None
    scorer_endpoint: str | None = None
    remote_timeout: float = 5.0
    ui_dir: str | None = None
    seed_prompts: bool = True

    @classmethod
    def from_env(cls, env: dict | None = None) -> "ServiceConfig":
        env = dict(os.environ if env is None else env)
        return cls(
            data_dir=env.get("KATEB_DATA_DIR", "./data"),
            lexicon_path=env.get("KATEB_LEXICON") or None,
            scoring_config_path=env.get("KATEB_SCORING_CONFIG") or None,
            port=int(env.get("KATEB_PORT", "8000")),
            detector_endpoint=env.get("KATEB_DETECTOR_ENDPOINT") or None,
            scorer_endpoint=env.get("KATEB_SCORER_ENDPOINT") or None,
            remote_timeout=float(env.get("KATEB_REMOTE_TIMEOUT", "5.0")),
            ui_dir=env.get("KATEB_UI_DIR") or None,
            seed_prompts=env.get("KATEB_SEED_PROMPTS", "1") not in ("0", "false", "no"),
        )


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="microseconds")


def label_to_wire(label, token: Token) -> dict:
    """Label JSON enriched with the token's span so clients need not re-tokenize."""
    d = label.to_dict()
    d["start"] = token.start
    d["end"] = token.end
    d["surface"] = token.surface
    return d


def lcs_word_diff(a: list[str], b: list[str]) -> list[dict]:
    """Word-level LCS diff as runs of equal / deleted / inserted tokens.

    Deterministic: on ties the source-side deletion is emitted first, so
    changed regions always read deletions-then-insertions.
    """
    n, m = len(a), len(b)
    lcs = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        for j in range(m - 1, -1, -1):
            if a[i] == b[j]:
                lcs[i][j] = lcs[i + 1][j + 1] + 1
            else:
                lcs[i][j] = max(lcs[i + 1][j], lcs[i][j + 1])
    ops: list[tuple[str, str]] = []
    i = j = 0
    while i < n or j < m:
        if i < n and j < m and a[i] == b[j] and lcs[i][j] == lcs[i + 1][j + 1] + 1:
            ops.append(("equal", a[i]))
            i += 1
            j += 1
        elif i < n and (j == m or lcs[i + 1][j] >= lcs[i][j + 1]):
            ops.append(("deleted", a[i]))
            i += 1
        else:
            ops.append(("inserted", b[j]))
            j += 1
    runs: list[dict] = []
    for op, tok in ops:
        if runs and runs[-1]["op"] == op:
            runs[-1]["tokens"].append(tok)
        else:
            runs.append({"op": op, "tokens": [tok]})
    return runs


class SessionService:
    """Everything the REST surface exposes, callable in-process."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.store = DataStore(config.data_dir)
        lexicon_path = config.lexicon_path or str(_DEFAULT_LEXICON)
        self.rule_backend = RuleBackend(load_lexicon(lexicon_path))
        if config.scoring_config_path:
            self.scoring_config: ScoringConfig = load_scoring_config(config.scoring_config_path)
        else:
            self.scoring_config = default_scoring_config()
        self.remote_detector = (
            RemoteBackend(config.detector_endpoint, config.remote_timeout)
            if config.detector_endpoint else None
        )
        self.remote_scorer = (
            RemoteScorer(config.scorer_endpoint, config.remote_timeout)
            if config.scorer_endpoint else None
        )
        if config.seed_prompts and len(self.store.prompts) == 0:
            self.store.prompts.seed_defaults()

    # -- users ------------------------------------------------------------

    def create_user(self, fields: dict | None = None) -> dict:
        record = {"user_id": uuid.uuid4().hex, "locale": "ar", "created_at": _now()}
        if fields:
            record.update(self._clean_profile(fields))
        return self.store.put_user(record)

    def update_profile(self, user_id: str, fields: dict) -> dict:
        existing = self.store.get_user(user_id)
        cleaned = self._clean_profile(fields)
        return self.store.put_user({**existing, **cleaned, "user_id": user_id})

    @staticmethod
    def _clean_profile(fields: dict) -> dict:
        cleaned: dict = {}
        for key in _PROFILE_FIELDS:
            if key not in fields or fields[key] is None:
                continue
            value = fields[key]
            if key == "self_level":
                value = parse_level(str(value)).name
            elif key == "locale":
                if value not in LOCALES:
                    raise ValidationError(f"locale must be one of {sorted(LOCALES)}")
            cleaned[key] = value
        return cleaned

    # -- essays -----------------------------------------------------------

    def create_essay(self, user_id: str, prompt_id: str) -> dict:
        self.store.get_user(user_id)
        self.store.prompts.get(prompt_id)
        record = {
            "essay_id": uuid.uuid4().hex,
            "user_id": user_id,
            "prompt_id": prompt_id,
            "created_at": _now(),
        }
        return self.store.add_essay(record)

    def get_essay(self, essay_id: str) -> dict:
        essay = dict(self.store.get_essay(essay_id))
        essay["revisions"] = [
            {
                "revision_no": s["revision_no"],
                "timestamp": s["timestamp"],
                "error_count": s["feedback"]["error_count"],
                "cefr": s["feedback"]["cefr"],
            }
            for s in self.store.get_submissions(essay_id)
        ]
        return essay

    # -- checking pipeline --------------------------------------------------

    def compute_feedback(self, text: str, min_words: int) -> dict:
        """Deterministic pipeline: detect, correct, featurize, score.

        Returns the feedback dict exactly as it is persisted, so re-running
        on a stored submission's text must reproduce the stored bytes.
        """
        tokens = tokenize(text)
        if count_words(tokens) == 0:
            raise UnscorableInputError("submission contains no Arabic words")

        degraded = False
        backend: DetectorBackend = self.remote_detector or self.rule_backend
        try:
            result = correct(tokens, backend)
        except BackendUnavailableError:
            if backend is self.rule_backend:
                raise
            backend = self.rule_backend
            degraded = True
            result = correct(tokens, backend)

        corrected = apply_script(text, result.script)
        features = extract_features(tokens, split_sentences(tokens), result.labels)

        if self.remote_scorer is not None:
            try:
                cefr = self.remote_scorer.score_text(text)
            except BackendUnavailableError:
                cefr = score(features, self.scoring_config)
                degraded = True
        else:
            cefr = score(features, self.scoring_config)

        wc = features.word_count
        return {
            "labels": [label_to_wire(lab, tok) for lab, tok in zip(result.labels, tokens)],
            "corrected_text": corrected,
            "cefr": cefr.name,
            "config_id": self.scoring_config.config_id,
            "error_count": sum(1 for lab in result.labels if lab.flagged),
            "word_count": wc,
            "below_minimum": wc < min_words,
            "backend_id": backend.backend_id,
            "degraded": degraded,
        }

    def check_submission(self, essay_id: str, text: str) -> dict:
        essay = self.store.get_essay(essay_id)
        prompt = self.store.prompts.get(essay["prompt_id"])
        feedback = self.compute_feedback(text, prompt.min_words)
        return self.store.append_submission(
            essay_id,
            lambda rev: {
                "essay_id": essay_id,
                "revision_no": rev,
                "text": text,
                "timestamp": _now(),
                "feedback": feedback,
            },
        )

    # -- progress and diff --------------------------------------------------

    def get_progress(self, essay_id: str) -> dict:
        self.store.get_essay(essay_id)
        points = [
            {
                "revision_no": s["revision_no"],
                "timestamp": s["timestamp"],
                "error_count": s["feedback"]["error_count"],
                "cefr": s["feedback"]["cefr"],
            }
            for s in self.store.get_submissions(essay_id)
        ]
        return {"essay_id": essay_id, "points": points}

    def diff_revisions(self, essay_id: str, from_rev: int, to_rev: int) -> dict:
        self.store.get_essay(essay_id)
        src = self.store.get_revision(essay_id, from_rev)
        dst = self.store.get_revision(essay_id, to_rev)
        a = [t.surface for t in tokenize(src["text"])]
        b = [t.surface for t in tokenize(dst["text"])]
        return {
            "essay_id": essay_id,
            "from": from_rev,
            "to": to_rev,
            "ops": lcs_word_diff(a, b),
        }
