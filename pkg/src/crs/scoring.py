"""Toxicity scoring: a local lexicon scorer and a remote-client twin.

The local scorer combines per-term weights with noisy-or, so the score
is bounded, monotone in hits, and grows with distinct offensive terms.
The remote client speaks a minimal Perspective-style protocol and shares
the same result type; callers fall back to the local scorer on failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import requests

from .errors import RemoteMalformed, RemoteUnavailable
from .normalizer import NormalizedText

BAND_CLEAN = "clean"
BAND_GRAY = "gray"
BAND_OFFENSIVE = "offensive_candidate"


@dataclass(frozen=True)
class ToxicityScore:
    value: float
    source: str = "local"  # local | remote
    contributions: tuple[tuple[str, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "source": self.source,
            "contributions": [list(c) for c in self.contributions],
        }


@dataclass(frozen=True)
class ScorerConfig:
    offensive_threshold: float = 0.7
    clean_threshold: float = 0.05
    remote_endpoint: str | None = None
    remote_timeout: float = 2.0
    api_key_header: str | None = None
    api_key: str | None = None

    def __post_init__(self):
        if not 0 <= self.clean_threshold < self.offensive_threshold <= 1:
            raise ValueError("need 0 <= clean_threshold < offensive_threshold <= 1")


class ToxicityLexicon:
    """term -> weight in (0, 1], terms lowercase."""

    def __init__(self, entries: dict[str, float]):
        for term, w in entries.items():
            if term != term.lower():
                raise ValueError(f"lexicon term {term!r} is not lowercase")
            if not 0 < w <= 1:
                raise ValueError(f"weight for {term!r} outside (0, 1]")
        self.entries = dict(entries)

    @classmethod
    def load(cls, path) -> "ToxicityLexicon":
        entries = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                term, _, weight = line.partition("\t")
                entries[term] = float(weight)
        return cls(entries)


def score_local(norm: NormalizedText, lex: ToxicityLexicon) -> ToxicityScore:
    """Noisy-or over distinct folded word tokens found in the lexicon."""
    hits = sorted(set(norm.folded_words()) & lex.entries.keys())
    contributions = tuple((t, lex.entries[t]) for t in hits)
    miss = 1.0
    for _, w in contributions:
        miss *= 1.0 - w
    return ToxicityScore(value=1.0 - miss, source="local",
                         contributions=contributions)


def score_remote(body: str, cfg: ScorerConfig) -> ToxicityScore:
    """POST {"text": ...} to the configured endpoint, parse {"score": p}."""
    if not cfg.remote_endpoint:
        raise RemoteUnavailable("no remote endpoint configured")
    headers = {}
    if cfg.api_key_header and cfg.api_key:
        headers[cfg.api_key_header] = cfg.api_key
    try:
        resp = requests.post(cfg.remote_endpoint, json={"text": body},
                             headers=headers, timeout=cfg.remote_timeout)
    except requests.RequestException as exc:
        raise RemoteUnavailable(str(exc)) from exc
    if resp.status_code != 200:
        raise RemoteUnavailable(f"HTTP {resp.status_code}")
    try:
        score = resp.json()["score"]
        value = float(score)
    except (ValueError, KeyError, TypeError) as exc:
        raise RemoteMalformed(f"bad response body: {resp.text[:200]}") from exc
    if math.isnan(value):
        raise RemoteMalformed("score is NaN")
    return ToxicityScore(value=min(1.0, max(0.0, value)), source="remote")


def score_comment(norm: NormalizedText, lex: ToxicityLexicon,
                  cfg: ScorerConfig) -> ToxicityScore:
    """Remote-then-local facade; never fails."""
    if cfg.remote_endpoint:
        try:
            return score_remote(norm.original, cfg)
        except (RemoteUnavailable, RemoteMalformed):
            pass
    return score_local(norm, lex)


def band(score: ToxicityScore, cfg: ScorerConfig) -> str:
    if score.value <= cfg.clean_threshold:
        return BAND_CLEAN
    if score.value >= cfg.offensive_threshold:
        return BAND_OFFENSIVE
    return BAND_GRAY
