"""Paraphrase suggestions for offensive comments.

Three strategies, always returned in order: milder-synonym substitution,
[MASK] substitution, and an external rewriter with a deletion fallback.
Every suggestion is re-scanned against the active ruleset before it is
returned; wording outside the matched spans is never touched.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import requests

from .errors import RewriterUnavailable, RewriterUnsafe, UnsafeThesaurus
from .normalizer import NormalizedText, normalize
from .rules import RuleSet, scan

MASK_TOKEN = "[MASK]"


@dataclass(frozen=True)
class ParaphraseSuggestion:
    strategy: str  # synonym | mask | rewrite
    text: str
    #: ((byte_start, byte_end), replacement) edits on the original;
    #: applying them in order reproduces text exactly
    changed_spans: tuple[tuple[tuple[int, int], str], ...]
    fallback: bool = False
    duplicate: bool = False

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "text": self.text,
            "changed_spans": [{"start": s, "end": e, "replacement": r}
                              for (s, e), r in self.changed_spans],
            "fallback": self.fallback,
            "duplicate": self.duplicate,
        }


class MilderThesaurus:
    """offensive term -> ordered milder alternatives, rule-clean by load."""

    def __init__(self, entries: dict[str, list[str]], ruleset: RuleSet | None = None):
        if ruleset is not None:
            for term, alts in entries.items():
                for alt in alts:
                    if scan(normalize(alt), ruleset):
                        raise UnsafeThesaurus(
                            f"alternative {alt!r} for {term!r} matches the ruleset")
        self.entries = {t: list(a) for t, a in entries.items()}

    @classmethod
    def load(cls, path, ruleset: RuleSet | None = None) -> "MilderThesaurus":
        entries = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                term, _, alts = line.partition("\t")
                entries[term] = [a for a in alts.split("|") if a]
        return cls(entries, ruleset)


def merge_spans(matches) -> list[tuple[int, int]]:
    """Union of overlapping byte spans, sorted."""
    spans = sorted((m.start, m.end) for m in matches)
    merged: list[list[int]] = []
    for s, e in spans:
        if merged and s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    return [(s, e) for s, e in merged]


def _apply_edits(original: str, edits) -> str:
    raw = original.encode("utf-8")
    out = []
    pos = 0
    for (s, e), repl in edits:
        out.append(raw[pos:s])
        out.append(repl.encode("utf-8"))
        pos = e
    out.append(raw[pos:])
    return b"".join(out).decode("utf-8")


def _extend_deletions(raw: bytes, edits):
    """Grow deletion spans over one side's whitespace so no doubled
    blank is left behind; spans never cross neighboring edits."""
    out = []
    last_end = 0
    for (s, e), repl in sorted(edits):
        if repl == "":
            if s > last_end and raw[s - 1:s] == b" ":
                while s > last_end and raw[s - 1:s] == b" ":
                    s -= 1
            elif raw[e:e + 1] == b" ":
                while raw[e:e + 1] == b" ":
                    e += 1
        s = max(s, last_end)
        out.append(((s, e), repl))
        last_end = e
    return out


def _folded_key(norm: NormalizedText, surface: str) -> str:
    return normalize(surface, None).folded.strip()


def _finish_stripped(original: str, edits):
    """Apply edits, strip edge whitespace, and extend edge edits so the
    recorded changed_spans still reproduce the text exactly."""
    raw = original.encode("utf-8")
    text_b = _apply_edits(original, edits).encode("utf-8")
    lead = len(text_b) - len(text_b.lstrip())
    trail = len(text_b) - len(text_b.rstrip())
    out = list(edits)
    if lead:
        if out and out[0][0][0] == 0:
            out[0] = (out[0][0], out[0][1].lstrip())
        else:
            out.insert(0, ((0, lead), ""))
    if trail:
        if out and out[-1][0][1] == len(raw):
            out[-1] = (out[-1][0], out[-1][1].rstrip())
        else:
            out.append(((len(raw) - trail, len(raw)), ""))
    text = _apply_edits(original, out)
    return text, tuple(out)


def paraphrase_synonym(norm: NormalizedText, matches, thesaurus: MilderThesaurus,
                       ruleset: RuleSet) -> ParaphraseSuggestion:
    """Replace each matched span by its first rule-clean alternative;
    spans without a viable alternative are deleted."""
    raw = norm.original.encode("utf-8")
    edits = []
    for s, e in merge_spans(matches):
        surface = raw[s:e].decode("utf-8")
        alts = thesaurus.entries.get(_folded_key(norm, surface), [])
        replacement = None
        for alt in alts:
            if not scan(normalize(alt), ruleset):
                replacement = alt
                break
        edits.append(((s, e), replacement if replacement is not None else ""))
    edits = _extend_deletions(raw, edits)
    text, spans = _finish_stripped(norm.original, edits)
    if scan(normalize(text), ruleset):
        return _replace_strategy(paraphrase_deletion(norm, matches, ruleset), "synonym")
    return ParaphraseSuggestion("synonym", text, spans)


def paraphrase_mask(norm: NormalizedText, matches) -> ParaphraseSuggestion:
    raw = norm.original.encode("utf-8")
    edits = [((s, e), MASK_TOKEN) for s, e in merge_spans(matches)]
    text = _apply_edits(norm.original, edits)
    return ParaphraseSuggestion("mask", text, tuple(edits))


def paraphrase_deletion(norm: NormalizedText, matches,
                        ruleset: RuleSet) -> ParaphraseSuggestion:
    """All matched spans removed, whitespace collapsed."""
    raw = norm.original.encode("utf-8")
    edits = _extend_deletions(raw, [((s, e), "") for s, e in merge_spans(matches)])
    text, spans = _finish_stripped(norm.original, edits)
    if scan(normalize(text), ruleset):
        # deleting spans exposed a new hit (adjacency); mask everything left
        full = ((0, len(raw)), MASK_TOKEN)
        return ParaphraseSuggestion("rewrite", MASK_TOKEN, (full,), fallback=True)
    return ParaphraseSuggestion("rewrite", text, spans, fallback=True)


def _replace_strategy(s: ParaphraseSuggestion, strategy: str,
                      fallback: bool = True) -> ParaphraseSuggestion:
    return ParaphraseSuggestion(strategy, s.text, s.changed_spans,
                                fallback=fallback, duplicate=s.duplicate)


class RewriterClient:
    """POST {"text": ...} -> {"rewrite": ...}."""

    def __init__(self, endpoint: str, timeout: float = 2.0):
        self.endpoint = endpoint
        self.timeout = timeout

    def rewrite(self, body: str) -> str:
        try:
            resp = requests.post(self.endpoint, json={"text": body},
                                 timeout=self.timeout)
        except requests.RequestException as exc:
            raise RewriterUnavailable(str(exc)) from exc
        if resp.status_code != 200:
            raise RewriterUnavailable(f"HTTP {resp.status_code}")
        try:
            return str(resp.json()["rewrite"])
        except (ValueError, KeyError, TypeError) as exc:
            raise RewriterUnavailable(f"bad response: {resp.text[:200]}") from exc


def paraphrase_rewrite(body: str, client: RewriterClient,
                       ruleset: RuleSet) -> ParaphraseSuggestion:
    text = client.rewrite(body)
    if scan(normalize(text), ruleset):
        raise RewriterUnsafe("rewriter output matches the ruleset")
    raw_len = len(body.encode("utf-8"))
    return ParaphraseSuggestion("rewrite", text, (((0, raw_len), text),))


def suggest(norm: NormalizedText, matches, ruleset: RuleSet,
            thesaurus: MilderThesaurus,
            rewriter: RewriterClient | None = None) -> list[ParaphraseSuggestion]:
    """Exactly three suggestions: [synonym, mask, rewrite-or-deletion]."""
    out = [
        paraphrase_synonym(norm, matches, thesaurus, ruleset),
        paraphrase_mask(norm, matches),
    ]
    third = None
    if rewriter is not None:
        try:
            third = paraphrase_rewrite(norm.original, rewriter, ruleset)
        except (RewriterUnavailable, RewriterUnsafe):
            third = None
    if third is None:
        third = paraphrase_deletion(norm, matches, ruleset)
    out.append(third)
    seen = set()
    flagged = []
    for s in out:
        if s.text in seen:
            s = ParaphraseSuggestion(s.strategy, s.text, s.changed_spans,
                                     fallback=s.fallback, duplicate=True)
        seen.add(s.text)
        flagged.append(s)
    return flagged
