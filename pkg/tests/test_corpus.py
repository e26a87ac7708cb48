import io
import json

import pytest

from crs.corpus import (CommentReader, cohen_kappa, class_breakdown, ingest,
                        load_annotations, prevalence_rate, sample,
                        scan_corpus)
from crs.errors import (DegenerateMarginals, EmptyExport, IdMismatch,
                        InvalidCounts, InvalidFraction, UnknownFormat)


def _jsonl(records):
    return io.BytesIO(
        b"".join(json.dumps(r).encode() + b"\n" for r in records))


def _record(i, body, platform="github"):
    return {"platform": platform, "id": str(i),
            "created_at": "2024-01-01T00:00:00Z", "body": body}


def test_jsonl_skips_malformed_lines():
    data = _jsonl([_record(1, "a"), _record(2, "b"), _record(3, "c")])
    data = io.BytesIO(data.getvalue() + b"{broken\n")
    reader = ingest(data, "jsonl")
    records = list(reader)
    assert len(records) == 3
    assert reader.skipped == 1


def test_empty_file_is_empty_stream():
    reader = ingest(io.BytesIO(b""), "jsonl")
    assert list(reader) == []
    assert reader.skipped == 0


def test_csv_round_trips_to_jsonl_equivalent(tmp_path):
    rows = [_record(i, f"body {i}") for i in range(5)]
    csv_lines = ["platform,id,created_at,body"]
    for r in rows:
        csv_lines.append(
            f'{r["platform"]},{r["id"]},{r["created_at"]},{r["body"]}')
    csv_src = io.BytesIO("\n".join(csv_lines).encode())
    via_csv = [c.to_dict() for c in ingest(csv_src, "csv")]
    via_jsonl = [c.to_dict() for c in ingest(_jsonl(rows), "jsonl")]
    assert via_csv == via_jsonl


def test_csv_requires_exact_header():
    src = io.BytesIO(b"platform,id,body\ngithub,1,x\n")
    with pytest.raises(UnknownFormat):
        list(ingest(src, "csv"))


def test_unknown_format_rejected():
    with pytest.raises(UnknownFormat):
        ingest(io.BytesIO(b""), "xml")


def test_sample_fraction_one_is_identity():
    records = [_record(i, "x") for i in range(100)]
    kept = list(sample(ingest(_jsonl(records), "jsonl"), 1.0, seed=0))
    assert len(kept) == 100


def test_sample_fraction_within_binomial_bound():
    records = [_record(i, "x") for i in range(10000)]
    kept = list(sample(ingest(_jsonl(records), "jsonl"), 0.1, seed=5))
    assert 900 <= len(kept) <= 1100


def test_sample_is_deterministic():
    records = [_record(i, "x") for i in range(1000)]
    a = {c.id for c in sample(ingest(_jsonl(records), "jsonl"), 0.3, seed=9)}
    b = {c.id for c in sample(ingest(_jsonl(records), "jsonl"), 0.3, seed=9)}
    assert a == b


def test_invalid_fraction_rejected():
    with pytest.raises(InvalidFraction):
        list(sample(iter([]), 0.0, seed=0))
    with pytest.raises(InvalidFraction):
        list(sample(iter([]), 1.5, seed=0))


def test_all_clean_corpus_rate_zero(engine):
    records = [_record(i, "thanks for the fix") for i in range(20)]
    stats, export = scan_corpus(ingest(_jsonl(records), "jsonl"), engine)
    assert stats.total == 20
    assert stats.offensive == 0
    assert stats.rate == 0.0
    assert export == []


def test_offensive_export_is_a_fixpoint(engine):
    records = [_record(1, "you are an idiot"), _record(2, "thanks"),
               _record(3, "what an a$$hole")]
    _stats, export = scan_corpus(ingest(_jsonl(records), "jsonl"), engine)
    assert len(export) == 2
    rescan = [_record(r["id"], r["body"]) for r in export]
    stats2, _ = scan_corpus(ingest(_jsonl(rescan), "jsonl"), engine)
    assert stats2.offensive == stats2.total == 2


def test_prevalence_rounding_half_up():
    assert prevalence_rate(991, 229250) == 0.43
    assert prevalence_rate(155, 237000) == 0.07
    assert prevalence_rate(0, 1000) == 0.00
    assert prevalence_rate(1, 16000) == 0.01  # 0.00625 rounds up


def test_invalid_counts_rejected():
    with pytest.raises(InvalidCounts):
        prevalence_rate(5, 0)
    with pytest.raises(InvalidCounts):
        prevalence_rate(10, 5)


def test_class_breakdown_percentages():
    export = ([{"classes": ["Personal"]}] * 79 +
              [{"classes": ["Swearing"]}] * 21 +
              [{"classes": ["Racial"]}] * 1)
    # 101 records so each class percent is of the offensive count,
    # rounded half-up to 2 decimals like the prevalence rate
    breakdown = class_breakdown(export)
    assert breakdown["Personal"] == 78.22
    assert breakdown["Swearing"] == 20.79
    assert breakdown["Racial"] == 0.99


def test_class_breakdown_multilabel_exceeds_100():
    export = [{"classes": ["Personal", "Swearing"]}] * 10
    breakdown = class_breakdown(export)
    assert breakdown["Personal"] == 100.0
    assert breakdown["Swearing"] == 100.0


def test_class_breakdown_empty_export():
    with pytest.raises(EmptyExport):
        class_breakdown([])


def _annotations(tmp_path, name, rows):
    path = tmp_path / name
    with open(path, "w", encoding="utf-8") as fh:
        for cid, labels in rows:
            fh.write(json.dumps({"id": cid, "labels": labels}) + "\n")
    return load_annotations(path)


def test_kappa_identical_annotations(tmp_path):
    rows = [(str(i), ["Personal"] if i % 2 else []) for i in range(10)]
    a = _annotations(tmp_path, "a.jsonl", rows)
    b = _annotations(tmp_path, "b.jsonl", rows)
    assert cohen_kappa(a, b).kappa == 1.0


def test_kappa_constructed_table(tmp_path):
    rows_a, rows_b = [], []
    i = 0
    for _ in range(40):  # both yes
        rows_a.append((str(i), ["Swearing"])); rows_b.append((str(i), ["Personal"])); i += 1
    for _ in range(40):  # both no
        rows_a.append((str(i), [])); rows_b.append((str(i), [])); i += 1
    for _ in range(10):  # a yes, b no
        rows_a.append((str(i), ["Personal"])); rows_b.append((str(i), [])); i += 1
    for _ in range(10):  # a no, b yes
        rows_a.append((str(i), [])); rows_b.append((str(i), ["Racial"])); i += 1
    a = _annotations(tmp_path, "a.jsonl", rows_a)
    b = _annotations(tmp_path, "b.jsonl", rows_b)
    result = cohen_kappa(a, b)
    assert result.observed_agreement == pytest.approx(0.8, abs=1e-9)
    assert result.expected_agreement == pytest.approx(0.5, abs=1e-9)
    assert result.kappa == pytest.approx(0.6, abs=1e-9)


def test_kappa_degenerate_marginals(tmp_path):
    rows = [(str(i), ["Swearing"]) for i in range(10)]
    a = _annotations(tmp_path, "a.jsonl", rows)
    b = _annotations(tmp_path, "b.jsonl", rows)
    with pytest.raises(DegenerateMarginals):
        cohen_kappa(a, b)


def test_kappa_id_mismatch(tmp_path):
    a = _annotations(tmp_path, "a.jsonl", [("1", []), ("2", [])])
    b = _annotations(tmp_path, "b.jsonl", [("1", []), ("3", [])])
    with pytest.raises(IdMismatch):
        cohen_kappa(a, b)


def test_kappa_per_class_projection(tmp_path):
    rows_a = [("1", ["Personal"]), ("2", ["Swearing"]), ("3", [])]
    rows_b = [("1", ["Personal"]), ("2", []), ("3", [])]
    a = _annotations(tmp_path, "a.jsonl", rows_a)
    b = _annotations(tmp_path, "b.jsonl", rows_b)
    assert cohen_kappa(a, b, projection="Personal").kappa == 1.0
