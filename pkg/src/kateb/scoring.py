"""Essay feature extraction and banded CEFR scoring.

The scorer is a transparent stand-in with the same interface a learned model
would have: each feature lands in one of six bands, bands combine by weight,
and a length cap keeps very short texts from scoring high.  A remote scorer
endpoint can replace it without touching callers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Sequence

import requests

from .errors import BackendUnavailableError, ConfigError, UnscorableInputError, ValidationError
from .tags import TokenLabel
from .textcore import PUNCT, WORD, NormProfile, SpanRange, Token, count_words, normalize


class CefrLevel(IntEnum):
    A1 = 1
    A2 = 2
    B1 = 3
    B2 = 4
    C1 = 5
    C2 = 6


def parse_level(name: str) -> CefrLevel:
    try:
        return CefrLevel[name]
    except KeyError:
        raise ValidationError(f"unknown CEFR level {name!r}") from None


# Required word counts by level band.
_MIN_WORDS = {
    CefrLevel.A1: 50,
    CefrLevel.A2: 50,
    CefrLevel.B1: 100,
    CefrLevel.B2: 100,
    CefrLevel.C1: 200,
    CefrLevel.C2: 200,
}


def min_words_for(level: CefrLevel) -> int:
    return _MIN_WORDS[level]


def meets_length_requirement(word_count: int, level: CefrLevel) -> bool:
    return word_count >= min_words_for(level)


@dataclass(frozen=True)
class FeatureVector:
    word_count: int
    avg_sentence_len: float
    type_token_ratio: float
    error_density: float   # flagged tokens per 100 words
    punct_density: float   # punctuation tokens per 100 words

    def validate(self) -> None:
        if self.word_count < 1:
            raise ValidationError("word_count must be >= 1")
        if not (0.0 < self.type_token_ratio <= 1.0):
            raise ValidationError("type_token_ratio must be in (0, 1]")
        if self.avg_sentence_len <= 0:
            raise ValidationError("avg_sentence_len must be positive")
        if self.error_density < 0 or self.punct_density < 0:
            raise ValidationError("densities must be non-negative")


_TTR_PROFILE = NormProfile.matching()


def extract_features(tokens: Sequence[Token], sentences: Sequence[SpanRange], labels: Sequence[TokenLabel]) -> FeatureVector:
    """Compute the five scoring features.

    ``labels`` must be the cascade output for the same token list.  A text
    with no word tokens is unscorable.
    """
    if len(labels) != len(tokens):
        raise ValidationError(f"{len(labels)} labels for {len(tokens)} tokens")
    wc = count_words(list(tokens))
    if wc == 0:
        raise UnscorableInputError("no word tokens to score")

    # Sentences that actually contain a word; bare punctuation runs do not
    # dilute the average.
    word_sentences = 0
    for rng in sentences:
        if any(t.kind == WORD and rng.start <= t.start and t.end <= rng.end for t in tokens):
            word_sentences += 1
    word_sentences = max(1, word_sentences)

    distinct = {normalize(t.surface, _TTR_PROFILE) for t in tokens if t.kind == WORD}
    flagged = sum(1 for lab in labels if lab.flagged)
    punct = sum(1 for t in tokens if t.kind == PUNCT)

    return FeatureVector(
        word_count=wc,
        avg_sentence_len=wc / word_sentences,
        type_token_ratio=len(distinct) / wc,
        error_density=100.0 * flagged / wc,
        punct_density=100.0 * punct / wc,
    )


FEATURE_NAMES = ("word_count", "avg_sentence_len", "type_token_ratio", "error_density", "punct_density")

_DIRECTIONS = ("up", "down")


@dataclass(frozen=True)
class FeatureBand:
    """Five thresholds splitting a feature into six bands.

    direction "up": higher values band higher; thresholds strictly increase.
    direction "down": lower values band higher; thresholds strictly decrease.
    """

    thresholds: tuple[float, ...]
    direction: str
    weight: float

    def band(self, value: float) -> int:
        if self.direction == "up":
            return 1 + sum(1 for t in self.thresholds if value >= t)
        return 1 + sum(1 for t in self.thresholds if value <= t)

    def representative(self, band: int) -> float:
        """A value guaranteed to land in ``band`` (used by the sanity check)."""
        t = self.thresholds
        if self.direction == "up":
            if band == 1:
                return t[0] - max(1.0, abs(t[0]) * 0.5)
            return t[band - 2]
        if band == 1:
            return t[0] + max(1.0, abs(t[0]) * 0.5)
        return t[band - 2]


@dataclass(frozen=True)
class ScoringConfig:
    config_id: str
    bands: dict[str, FeatureBand]
    length_cap_bonus: int = 1

    @classmethod
    def from_dict(cls, d: dict) -> "ScoringConfig":
        try:
            config_id = d["config_id"]
            raw = d["features"]
            bonus = int(d.get("length_cap_bonus", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad scoring config structure: {exc}") from exc
        if not isinstance(config_id, str) or not config_id:
            raise ConfigError("config_id must be a non-empty string")
        bands: dict[str, FeatureBand] = {}
        for name in FEATURE_NAMES:
            if name not in raw:
                raise ConfigError(f"missing feature {name!r}")
            spec = raw[name]
            try:
                band = FeatureBand(
                    thresholds=tuple(float(x) for x in spec["thresholds"]),
                    direction=str(spec["direction"]),
                    weight=float(spec["weight"]),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"bad band for {name!r}: {exc}") from exc
            bands[name] = band
        cfg = cls(config_id=config_id, bands=bands, length_cap_bonus=bonus)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        total_weight = 0.0
        for name, band in self.bands.items():
            if band.direction not in _DIRECTIONS:
                raise ConfigError(f"{name}: direction must be one of {_DIRECTIONS}")
            if len(band.thresholds) != 5:
                raise ConfigError(f"{name}: exactly 5 thresholds needed, got {len(band.thresholds)}")
            steps = zip(band.thresholds, band.thresholds[1:])
            if band.direction == "up":
                if not all(a < b for a, b in steps):
                    raise ConfigError(f"{name}: thresholds must strictly increase")
            else:
                if not all(a > b for a, b in steps):
                    raise ConfigError(f"{name}: thresholds must strictly decrease")
            if band.weight < 0:
                raise ConfigError(f"{name}: negative weight")
            total_weight += band.weight
        if total_weight <= 0:
            raise ConfigError("weights must sum to a positive value")
        if self.length_cap_bonus < 0:
            raise ConfigError("length_cap_bonus must be >= 0")
        # Every level must be reachable by some feature vector.
        for lv in CefrLevel:
            fv = FeatureVector(
                word_count=max(1, int(self.bands["word_count"].representative(lv.value))),
                avg_sentence_len=max(0.1, self.bands["avg_sentence_len"].representative(lv.value)),
                type_token_ratio=min(1.0, max(0.01, self.bands["type_token_ratio"].representative(lv.value))),
                error_density=max(0.0, self.bands["error_density"].representative(lv.value)),
                punct_density=max(0.0, self.bands["punct_density"].representative(lv.value)),
            )
            if score(fv, self) is not lv:
                raise ConfigError(f"level {lv.name} is unreachable under this config")


def score(fv: FeatureVector, config: ScoringConfig) -> CefrLevel:
    """Band each feature, combine by weight, apply the length cap."""
    fv.validate()
    values = {
        "word_count": float(fv.word_count),
        "avg_sentence_len": fv.avg_sentence_len,
        "type_token_ratio": fv.type_token_ratio,
        "error_density": fv.error_density,
        "punct_density": fv.punct_density,
    }
    weighted = 0.0
    total = 0.0
    for name, band in config.bands.items():
        weighted += band.weight * band.band(values[name])
        total += band.weight
    level_idx = int(math.floor(weighted / total + 0.5))
    level_idx = max(1, min(6, level_idx))
    cap = config.bands["word_count"].band(values["word_count"]) + config.length_cap_bonus
    return CefrLevel(min(level_idx, max(1, cap)))


def load_scoring_config(path: str | Path) -> ScoringConfig:
    """Read a JSON scoring config; structural problems raise ConfigError."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read scoring config {path}: {exc}") from exc
    return ScoringConfig.from_dict(data)


def default_scoring_config() -> ScoringConfig:
    return load_scoring_config(Path(__file__).parent / "data" / "default_scoring.json")


class RemoteScorer:
    """HTTP scorer: POST {text} -> {level}; failures raise BackendUnavailableError."""

    def __init__(self, endpoint: str, timeout: float = 5.0):
        self.endpoint = endpoint
        self.timeout = timeout
        self.backend_id = f"remote:{endpoint}"

    def score_text(self, text: str) -> CefrLevel:
        try:
            resp = requests.post(self.endpoint, json={"text": text}, timeout=self.timeout)
            resp.raise_for_status()
            name = resp.json()["level"]
        except (requests.RequestException, ValueError, KeyError, TypeError) as exc:
            raise BackendUnavailableError(f"scorer endpoint {self.endpoint}: {exc}") from exc
        try:
            return parse_level(str(name))
        except ValidationError as exc:
            raise BackendUnavailableError(f"scorer endpoint {self.endpoint}: {exc}") from exc
