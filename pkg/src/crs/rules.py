"""Versioned offensive-pattern rulesets and the text scanner.

Rules are plain data (JSON), each tagged with the offence classes it
evidences. Scanning runs patterns against the raw text (case-insensitive)
and/or the obfuscation-folded text, translating folded hits back to
original byte spans for highlighting.
"""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass

from .errors import DuplicateRuleId, InvalidPattern, ParseError
from .normalizer import NormalizedText

CLASSES = ("Personal", "Racial", "Swearing")
SEVERITIES = ("mild", "strong")
APPLIES_TO = ("raw", "folded", "both")

# constructs outside the supported linear-time dialect
_FORBIDDEN = re.compile(r"\(\?[^:]|\\[1-9]")


@dataclass(frozen=True)
class RulePattern:
    id: str
    pattern: str
    classes: frozenset[str]
    severity: str = "strong"
    applies_to: str = "both"
    word_boundary: bool = True


@dataclass(frozen=True)
class RuleMatch:
    rule_id: str
    start: int  # byte offsets into the original text
    end: int
    surface: str
    classes: frozenset[str]
    severity: str

    def to_dict(self) -> dict:
        return {
            "rule_id": self.rule_id,
            "start": self.start,
            "end": self.end,
            "surface": self.surface,
            "classes": sorted(self.classes, key=CLASSES.index),
            "severity": self.severity,
        }


class RuleSet:
    """Immutable, pre-compiled set of patterns."""

    def __init__(self, version: str, patterns: list[RulePattern]):
        if not version:
            raise ParseError("ruleset version must be nonempty")
        if not patterns:
            raise ParseError("ruleset must contain at least one pattern")
        self.version = version
        self.patterns = tuple(patterns)
        self._compiled = []
        seen = set()
        for p in self.patterns:
            if p.id in seen:
                raise DuplicateRuleId(p.id)
            seen.add(p.id)
            self._compiled.append((p, _compile(p, raw=False),
                                   _compile(p, raw=True)))

    def terms(self) -> list[str]:
        """Plain-word patterns (no metacharacters), for test generators."""
        return [p.pattern for p in self.patterns
                if re.fullmatch(r"[a-z ]+", p.pattern)]


def _validate_dialect(p: RulePattern) -> None:
    if _FORBIDDEN.search(p.pattern):
        raise InvalidPattern(p.id, "lookaround/backreferences are not supported")
    depth = 0
    i = 0
    src = p.pattern
    while i < len(src):
        ch = src[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "[":
            end = src.find("]", i + 2 if src[i + 1:i + 2] == "^" else i + 1)
            if end < 0:
                raise InvalidPattern(p.id, "unterminated character class")
            i = end + 1
            continue
        if ch == "(":
            if src[i + 1:i + 3] != "?:":
                raise InvalidPattern(p.id, "use non-capturing groups (?:...)")
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidPattern(p.id, "unbalanced parentheses")
        i += 1
    if depth != 0:
        raise InvalidPattern(p.id, "unbalanced parentheses")


def _compile(p: RulePattern, raw: bool):
    src = p.pattern
    if p.word_boundary:
        src = rf"\b(?:{src})\b"
    flags = re.IGNORECASE if raw else 0
    try:
        return re.compile(src, flags)
    except re.error as exc:
        raise InvalidPattern(p.id, str(exc)) from exc


def load_ruleset(source) -> RuleSet:
    """Load a ruleset from a path, raw bytes, or a binary stream."""
    if isinstance(source, bytes):
        data = source
    elif hasattr(source, "read"):
        data = source.read()
    else:
        with open(source, "rb") as fh:
            data = fh.read()
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"ruleset is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "rules" not in doc:
        raise ParseError("ruleset must be an object with a 'rules' list")
    patterns = []
    for idx, entry in enumerate(doc["rules"]):
        try:
            classes = frozenset(entry["classes"])
            if not classes or not classes <= set(CLASSES):
                raise ParseError(f"bad classes {sorted(classes)}", line=idx)
            severity = entry.get("severity", "strong")
            applies_to = entry.get("applies_to", "both")
            if severity not in SEVERITIES or applies_to not in APPLIES_TO:
                raise ParseError("bad severity/applies_to", line=idx)
            p = RulePattern(
                id=entry["id"],
                pattern=entry["pattern"],
                classes=classes,
                severity=severity,
                applies_to=applies_to,
                word_boundary=bool(entry.get("word_boundary", True)),
            )
        except KeyError as exc:
            raise ParseError(f"rule missing field {exc}", line=idx) from exc
        _validate_dialect(p)
        patterns.append(p)
    rs = RuleSet(str(doc.get("version", "")), patterns)
    return rs


def scan(norm: NormalizedText, rs: RuleSet) -> list[RuleMatch]:
    """Apply every pattern per its applies_to; total, deterministic."""
    hits: dict[tuple[str, int, int], RuleMatch] = {}
    byte_of = None
    for p, folded_re, raw_re in rs._compiled:
        if p.applies_to in ("folded", "both"):
            for m in folded_re.finditer(norm.folded):
                if m.start() == m.end():
                    continue
                start, end = norm.original_span(m.start(), m.end())
                key = (p.id, start, end)
                if key not in hits:
                    hits[key] = RuleMatch(p.id, start, end,
                                          norm.original_slice(start, end),
                                          p.classes, p.severity)
        if p.applies_to in ("raw", "both"):
            if byte_of is None:
                byte_of = _char_to_byte(norm.original)
            for m in raw_re.finditer(norm.original):
                if m.start() == m.end():
                    continue
                start, end = byte_of[m.start()], byte_of[m.end()]
                key = (p.id, start, end)
                if key not in hits:
                    hits[key] = RuleMatch(p.id, start, end, m.group(),
                                          p.classes, p.severity)
    return sorted(hits.values(), key=lambda h: (h.start, h.end, h.rule_id))


def _char_to_byte(text: str) -> list[int]:
    offs = [0]
    total = 0
    for ch in text:
        total += len(ch.encode("utf-8"))
        offs.append(total)
    return offs


def classes_of(matches) -> set[str]:
    out: set[str] = set()
    for m in matches:
        out |= m.classes
    return out
