"""Rule-based valence sentiment over word tokens.

A compact lexicon-and-heuristics analyzer in the VADER family: per-token
valence adjusted by negation, boosters and all-caps emphasis, summed and
squashed to a compound score in [-1, 1]. Feeds the classifier features;
exact parity with the reference tool is not a goal.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .normalizer import NormalizedText

NEGATION_SCALAR = -0.74
BOOSTER_INCREMENT = 0.293
CAPS_INCREMENT = 0.733
EXCLAMATION_INCREMENT = 0.292
MAX_EXCLAMATIONS = 3
NORMALIZATION_ALPHA = 15.0
NEGATION_WINDOW = 3
POSITIVE_THRESHOLD = 0.05
NEGATIVE_THRESHOLD = -0.05


@dataclass(frozen=True)
class SentimentResult:
    compound: float
    label: str  # positive | negative | neutral

    def to_dict(self) -> dict:
        return {"compound": self.compound, "label": self.label}


class ValenceLexicon:
    def __init__(self, valences: dict[str, float],
                 boosters: dict[str, float] | None = None,
                 negators: set[str] | None = None):
        for term, v in valences.items():
            if not -4 <= v <= 4:
                raise ValueError(f"valence for {term!r} outside [-4, 4]")
        self.valences = dict(valences)
        self.boosters = dict(boosters or {})
        self.negators = set(negators or ())

    @classmethod
    def load(cls, valences_path, boosters_path=None, negators_path=None):
        valences = _load_tsv(valences_path)
        boosters = _load_tsv(boosters_path) if boosters_path else {}
        negators = set()
        if negators_path:
            with open(negators_path, encoding="utf-8") as fh:
                negators = {line.strip() for line in fh
                            if line.strip() and not line.startswith("#")}
        return cls(valences, boosters, negators)


def _load_tsv(path) -> dict[str, float]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            term, _, value = line.partition("\t")
            out[term] = float(value)
    return out


def _sign(x: float) -> float:
    return 1.0 if x > 0 else -1.0 if x < 0 else 0.0


def analyze_sentiment(norm: NormalizedText, lex: ValenceLexicon) -> SentimentResult:
    words = norm.word_tokens()
    surfaces = [t.surface for t in words]
    keys = [s.lower() for s in surfaces]

    def is_caps(s: str) -> bool:
        return len(s) > 1 and s.isupper()

    alpha_tokens = [s for s in surfaces if any(c.isalpha() for c in s)]
    caps_active = (any(is_caps(s) for s in alpha_tokens)
                   and not all(is_caps(s) for s in alpha_tokens))

    x = 0.0
    for i, key in enumerate(keys):
        v = lex.valences.get(key)
        if v is None or key in lex.negators or key in lex.boosters:
            continue
        window = keys[max(0, i - NEGATION_WINDOW):i]
        if any(w in lex.negators for w in window):
            v *= NEGATION_SCALAR
        if i > 0 and keys[i - 1] in lex.boosters:
            v += _sign(v) * lex.boosters[keys[i - 1]]
        if caps_active and is_caps(surfaces[i]):
            v += _sign(v) * CAPS_INCREMENT
        x += v

    trailing = re.search(r"!+\s*$", norm.original)
    if trailing and x != 0.0:
        n = min(trailing.group().count("!"), MAX_EXCLAMATIONS)
        x += _sign(x) * EXCLAMATION_INCREMENT * n

    compound = x / math.sqrt(x * x + NORMALIZATION_ALPHA)
    compound = max(-1.0, min(1.0, compound))
    if compound >= POSITIVE_THRESHOLD:
        label = "positive"
    elif compound <= NEGATIVE_THRESHOLD:
        label = "negative"
    else:
        label = "neutral"
    return SentimentResult(compound=compound, label=label)
