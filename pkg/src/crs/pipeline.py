"""The four-phase analysis pipeline: detect, classify, highlight, paraphrase.

An EngineContext is an immutable snapshot of every loaded artifact; the
analyze() call is reentrant and hot-reload swaps whole snapshots.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import paraphrase as pp
from .errors import EngineNotReady
from .ml.features import Vocabulary, vectorize
from .ml.sgd import LinearSGDClassifier, OneVsRestOffenceClassifier
from .normalizer import NormalizeOptions, NormalizedText, normalize
from .rules import CLASSES, RuleMatch, RuleSet, classes_of, scan
from .scoring import (BAND_OFFENSIVE, ScorerConfig, ToxicityLexicon,
                      ToxicityScore, band, score_comment)
from .sentiment import SentimentResult, ValenceLexicon, analyze_sentiment

MODES = ("strict", "sensitive")


@dataclass(frozen=True)
class EngineContext:
    ruleset: RuleSet
    tox_lexicon: ToxicityLexicon
    scorer_cfg: ScorerConfig
    valence_lexicon: ValenceLexicon
    binary: LinearSGDClassifier
    multilabel: OneVsRestOffenceClassifier
    thesaurus: pp.MilderThesaurus
    mode: str = "sensitive"
    rewriter: pp.RewriterClient | None = None
    normalize_opts: NormalizeOptions = field(default_factory=NormalizeOptions)
    versions: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in MODES:
            raise EngineNotReady(f"unknown mode {self.mode!r}")
        for name in ("ruleset", "tox_lexicon", "valence_lexicon", "binary",
                     "multilabel", "thesaurus"):
            if getattr(self, name) is None:
                raise EngineNotReady(f"missing artifact: {name}")
        if self.binary.vocab.terms != self.multilabel.vocab.terms:
            raise EngineNotReady("binary and multilabel vocabularies differ")

    def version_info(self) -> dict:
        info = {"ruleset": self.ruleset.version, "mode": self.mode}
        info.update(self.versions)
        return info


@dataclass(frozen=True)
class AnalysisReport:
    verdict: str  # clean | offensive
    classes: frozenset[str]
    score: ToxicityScore
    band: str
    matches: tuple[RuleMatch, ...]
    sentiment: SentimentResult
    suggestions: tuple[pp.ParaphraseSuggestion, ...]
    versions: dict
    timing_ms: dict

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "classes": sorted(self.classes, key=CLASSES.index),
            "score": self.score.to_dict(),
            "band": self.band,
            "matches": [m.to_dict() for m in self.matches],
            "sentiment": self.sentiment.to_dict(),
            "suggestions": [s.to_dict() for s in self.suggestions],
            "versions": dict(self.versions),
            "timing_ms": dict(self.timing_ms),
        }


def _contribution_spans(norm: NormalizedText, score: ToxicityScore):
    """Pseudo-matches over the lexicon terms that drove a score-only
    verdict, so span-based paraphrasing still has targets."""
    terms = {t for t, _ in score.contributions}
    spans = []
    for tok in norm.folded_tokens:
        if tok.is_word and tok.surface in terms:
            start, end = norm.original_span(tok.cstart, tok.cend)
            spans.append(RuleMatch("toxicity-lexicon", start, end,
                                   norm.original_slice(start, end),
                                   frozenset(), "mild"))
    return spans


def analyze(body: str, ctx: EngineContext, mode: str | None = None) -> AnalysisReport:
    mode = mode or ctx.mode
    if mode not in MODES:
        raise EngineNotReady(f"unknown mode {mode!r}")
    timing = {}

    t0 = time.perf_counter()
    norm = normalize(body, ctx.normalize_opts)
    matches = tuple(scan(norm, ctx.ruleset))
    score = score_comment(norm, ctx.tox_lexicon, ctx.scorer_cfg)
    score_band = band(score, ctx.scorer_cfg)
    senti = analyze_sentiment(norm, ctx.valence_lexicon)
    fv = vectorize(ctx.binary.vocab, norm, 1 if matches else 0, senti)
    label, _margin = ctx.binary.predict(fv)

    if mode == "strict":
        offensive = bool(matches) and score_band == BAND_OFFENSIVE
    else:
        offensive = bool(matches) or score_band == BAND_OFFENSIVE or label == 1
    timing["detect"] = (time.perf_counter() - t0) * 1000

    t1 = time.perf_counter()
    classes: frozenset[str] = frozenset()
    if offensive:
        classes = frozenset(classes_of(matches)) or \
            frozenset(ctx.multilabel.predict_classes(fv))
    timing["classify"] = (time.perf_counter() - t1) * 1000

    t2 = time.perf_counter()
    # phase 3 carries the matches through as highlight spans
    targets = list(matches) or (_contribution_spans(norm, score)
                                if offensive else [])
    timing["highlight"] = (time.perf_counter() - t2) * 1000

    t3 = time.perf_counter()
    suggestions: tuple = ()
    if offensive:
        suggestions = tuple(pp.suggest(norm, targets, ctx.ruleset,
                                       ctx.thesaurus, ctx.rewriter))
    timing["paraphrase"] = (time.perf_counter() - t3) * 1000

    return AnalysisReport(
        verdict="offensive" if offensive else "clean",
        classes=classes,
        score=score,
        band=score_band,
        matches=matches,
        sentiment=senti,
        suggestions=suggestions,
        versions=ctx.version_info(),
        timing_ms=timing,
    )


def render_highlights(body: str, matches, marker: str = "brackets") -> str:
    """Wrap matched spans; overlapping spans merge (union span/classes)."""
    if marker not in ("brackets", "ansi"):
        raise ValueError(f"unknown marker {marker!r}")
    merged: list[tuple[int, int, set]] = []
    for m in sorted(matches, key=lambda m: (m.start, m.end)):
        if merged and m.start < merged[-1][1]:
            s, e, cl = merged[-1]
            merged[-1] = (s, max(e, m.end), cl | set(m.classes))
        else:
            merged.append((m.start, m.end, set(m.classes)))
    raw = body.encode("utf-8")
    out = []
    pos = 0
    for s, e, cl in merged:
        out.append(raw[pos:s].decode("utf-8"))
        surface = raw[s:e].decode("utf-8")
        if marker == "brackets":
            names = ",".join(sorted(cl, key=CLASSES.index))
            out.append(f"⟦{surface}|{names}⟧")
        else:
            out.append(f"\x1b[4m{surface}\x1b[0m")
        pos = e
    out.append(raw[pos:].decode("utf-8"))
    return "".join(out)
