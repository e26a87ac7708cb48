"""Corpus ingestion, sampling, prevalence scanning and rater agreement."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .errors import (DegenerateMarginals, EmptyExport, IdMismatch,
                     InvalidCounts, InvalidFraction, UnknownFormat,
                     UnreadableSource)
from .normalizer import MAX_BODY_BYTES
from .pipeline import EngineContext, analyze
from .rules import CLASSES

FORMATS = ("jsonl", "csv")
CSV_HEADER = ["platform", "id", "created_at", "body"]
PLATFORMS = ("github", "gitter", "slack", "stackoverflow", "other")


@dataclass(frozen=True)
class RawComment:
    platform: str
    id: str
    body: str
    created_at: str | None = None

    def to_dict(self) -> dict:
        out = {"platform": self.platform, "id": self.id, "body": self.body}
        if self.created_at is not None:
            out["created_at"] = self.created_at
        return out


class CommentReader:
    """Iterates RawComments from a JSONL or CSV source, counting skips."""

    def __init__(self, source, format: str = "jsonl"):
        if format not in FORMATS:
            raise UnknownFormat(format)
        self.format = format
        self.skipped = 0
        if hasattr(source, "read"):
            self._raw = source.read()
            if isinstance(self._raw, str):
                self._raw = self._raw.encode("utf-8")
        else:
            try:
                with open(source, "rb") as fh:
                    self._raw = fh.read()
            except OSError as exc:
                raise UnreadableSource(str(exc)) from exc

    def _make(self, platform, cid, created_at, body):
        if not cid or not isinstance(body, str):
            return None
        if len(body.encode("utf-8")) > MAX_BODY_BYTES:
            return None
        platform = platform if platform in PLATFORMS else "other"
        return RawComment(platform=platform, id=str(cid), body=body,
                          created_at=created_at or None)

    def __iter__(self):
        if self.format == "jsonl":
            for line in self._raw.splitlines():
                if not line.strip():
                    continue
                try:
                    doc = json.loads(line.decode("utf-8"))
                    rec = self._make(doc.get("platform", "other"),
                                     doc.get("id"), doc.get("created_at"),
                                     doc["body"])
                except (UnicodeDecodeError, json.JSONDecodeError, KeyError,
                        TypeError, AttributeError):
                    rec = None
                if rec is None:
                    self.skipped += 1
                    continue
                yield rec
        else:
            try:
                text = self._raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise UnreadableSource(f"CSV not UTF-8: {exc}") from exc
            reader = csv.DictReader(io.StringIO(text))
            if reader.fieldnames is None:
                return
            if [f.strip() for f in reader.fieldnames] != CSV_HEADER:
                raise UnknownFormat(
                    f"CSV header must be {','.join(CSV_HEADER)}")
            for row in reader:
                rec = self._make(row.get("platform"), row.get("id"),
                                 row.get("created_at"), row.get("body"))
                if rec is None:
                    self.skipped += 1
                    continue
                yield rec


def ingest(source, format: str = "jsonl") -> CommentReader:
    return CommentReader(source, format)


def sample(stream, fraction: float, seed: int):
    """Keep each record independently with probability `fraction`."""
    if not 0 < fraction <= 1:
        raise InvalidFraction(f"fraction {fraction} outside (0, 1]")
    rng = np.random.default_rng(seed)
    for rec in stream:
        if rng.random() < fraction:
            yield rec


@dataclass
class CorpusStats:
    platform: str
    total: int
    offensive: int
    rate: float
    per_class: dict[str, tuple[int, float]]
    skipped: int = 0

    def to_dict(self) -> dict:
        return {
            "platform": self.platform,
            "total": self.total,
            "offensive": self.offensive,
            "rate": self.rate,
            "per_class": {c: {"count": n, "percent": p}
                          for c, (n, p) in self.per_class.items()},
            "skipped": self.skipped,
        }

    def table(self) -> str:
        lines = [
            f"{'platform':<14}{self.platform}",
            f"{'total':<14}{self.total}",
            f"{'offensive':<14}{self.offensive}",
            f"{'rate %':<14}{self.rate:.2f}",
        ]
        for c in CLASSES:
            n, p = self.per_class.get(c, (0, 0.0))
            lines.append(f"  {c:<12}{n:>8}  {p:.2f}%")
        return "\n".join(lines)


def scan_corpus(stream, ctx: EngineContext, mode: str | None = None):
    """analyze() every record; returns (CorpusStats, offensive export)."""
    total = 0
    offensive = 0
    class_counts = {c: 0 for c in CLASSES}
    export = []
    platforms = set()
    for rec in stream:
        total += 1
        platforms.add(rec.platform)
        report = analyze(rec.body, ctx, mode=mode)
        if report.verdict != "offensive":
            continue
        offensive += 1
        for c in report.classes:
            class_counts[c] += 1
        export.append({
            "id": rec.id,
            "platform": rec.platform,
            "body": rec.body,
            "classes": sorted(report.classes, key=CLASSES.index),
            "score": report.score.value,
            "matches": [m.to_dict() for m in report.matches],
        })
    rate = prevalence_rate(offensive, total) if total else 0.0
    per_class = {
        c: (n, round(100.0 * n / offensive, 2) if offensive else 0.0)
        for c, n in class_counts.items()
    }
    platform = platforms.pop() if len(platforms) == 1 else "all"
    skipped = getattr(stream, "skipped", 0)
    return CorpusStats(platform, total, offensive, rate, per_class,
                       skipped=skipped), export


def prevalence_rate(offensive: int, total: int) -> float:
    """100 * offensive / total, rounded half-up to 2 decimals."""
    if total < 1 or offensive < 0 or offensive > total:
        raise InvalidCounts(f"offensive={offensive}, total={total}")
    pct = Decimal(100 * offensive) / Decimal(total)
    return float(pct.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def class_breakdown(export) -> dict[str, float]:
    """Percent of offensive records carrying each class; may sum > 100."""
    if not export:
        raise EmptyExport("no offensive records")
    counts = {c: 0 for c in CLASSES}
    for rec in export:
        for c in rec["classes"]:
            counts[c] += 1
    return {c: round(100.0 * n / len(export), 2) for c, n in counts.items()}


# --- inter-rater agreement ---

def load_annotations(path) -> dict[str, frozenset]:
    """JSONL of {"id": ..., "labels": [...]}; ids unique per annotator."""
    out: dict[str, frozenset] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            doc = json.loads(line)
            cid = str(doc["id"])
            if cid in out:
                raise IdMismatch(f"duplicate id {cid!r} in {path}")
            out[cid] = frozenset(doc.get("labels", []))
    return out


@dataclass(frozen=True)
class KappaResult:
    kappa: float
    observed_agreement: float
    expected_agreement: float


def cohen_kappa(a: dict[str, frozenset], b: dict[str, frozenset],
                projection: str = "offensive") -> KappaResult:
    """Two-rater kappa over a binary projection of label sets.

    projection "offensive" compares nonempty-vs-empty label sets; a
    class name compares has-class-vs-not.
    """
    if a.keys() != b.keys():
        raise IdMismatch("annotators cover different comment ids")
    if not a:
        raise IdMismatch("no annotations")

    def project(labels: frozenset) -> bool:
        if projection == "offensive":
            return bool(labels)
        return projection in labels

    n = len(a)
    agree = 0
    a_yes = 0
    b_yes = 0
    for cid in a:
        pa, pb = project(a[cid]), project(b[cid])
        agree += pa == pb
        a_yes += pa
        b_yes += pb
    po = agree / n
    pe = (a_yes / n) * (b_yes / n) + (1 - a_yes / n) * (1 - b_yes / n)
    if pe >= 1.0:
        raise DegenerateMarginals("both raters gave a constant label")
    kappa = (po - pe) / (1 - pe)
    return KappaResult(kappa=kappa, observed_agreement=po, expected_agreement=pe)
