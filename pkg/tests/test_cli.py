import json
import subprocess
import sys


def run_cli(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "crs.cli", *args],
                          capture_output=True, text=True, input=stdin)


def test_analyze_marked_output():
    proc = run_cli("analyze", "--text", "you idiot", "--marked")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "you ⟦idiot|Personal⟧"
    assert any("[synonym]" in line for line in lines)


def test_analyze_empty_text_is_clean_json():
    proc = run_cli("analyze", "--text", "")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "clean"


def test_analyze_reads_stdin():
    proc = run_cli("analyze", "--stdin", stdin="you idiot")
    assert json.loads(proc.stdout)["verdict"] == "offensive"


def test_unknown_flag_is_usage_error():
    proc = run_cli("analyze", "--bogus", "x")
    assert proc.returncode == 1


def test_missing_text_is_usage_error():
    proc = run_cli("analyze")
    assert proc.returncode == 1


def test_scan_missing_file_is_data_error():
    proc = run_cli("scan", "--input", "/does/not/exist.jsonl")
    assert proc.returncode == 2


def test_scan_writes_stats_and_export(tmp_path):
    corpus = tmp_path / "corpus.jsonl"
    with open(corpus, "w", encoding="utf-8") as fh:
        for i, body in enumerate(["you are an idiot", "thanks", "nice"]):
            fh.write(json.dumps({"platform": "github", "id": str(i),
                                 "body": body}) + "\n")
    stats_path = tmp_path / "stats.json"
    export_path = tmp_path / "off.jsonl"
    proc = run_cli("scan", "--input", str(corpus),
                   "--out-stats", str(stats_path),
                   "--out-offensive", str(export_path))
    assert proc.returncode == 0
    stats = json.loads(stats_path.read_text())
    assert stats["total"] == 3
    assert stats["offensive"] == 1
    export = [json.loads(line) for line in export_path.read_text().splitlines()]
    assert export[0]["classes"] == ["Personal"]


def test_train_reports_corpus_ratio(tmp_path):
    off = tmp_path / "off.txt"
    clean = tmp_path / "clean.txt"
    off.write_text("you are an idiot\n")
    clean.write_text("thanks for the careful review\n")
    proc = run_cli("train", "--offensive", str(off), "--clean", str(clean),
                   "--out", str(tmp_path / "model.json"), "--min-df", "1")
    assert proc.returncode == 0
    assert "4 examples (1 offensive / 3 non-offensive)" in proc.stdout
    assert (tmp_path / "model.json").exists()


def test_kappa_identical_files(tmp_path):
    path = tmp_path / "a.jsonl"
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(6):
            labels = ["Personal"] if i % 2 else []
            fh.write(json.dumps({"id": str(i), "labels": labels}) + "\n")
    proc = run_cli("kappa", "--a", str(path), "--b", str(path))
    assert proc.returncode == 0
    assert "kappa 1.0000" in proc.stdout


def test_paraphrase_clean_text_is_data_error():
    proc = run_cli("paraphrase", "--text", "thanks for everything")
    assert proc.returncode == 2


def test_cli_json_matches_module_output(engine):
    from crs.pipeline import analyze

    body = "you are an idiot"
    proc = run_cli("analyze", "--text", body)
    cli_doc = json.loads(proc.stdout)
    module_doc = analyze(body, engine).to_dict()
    cli_doc.pop("timing_ms")
    module_doc.pop("timing_ms")
    assert cli_doc == module_doc


def test_eval_perfect_pair(tmp_path):
    off = tmp_path / "off.txt"
    clean = tmp_path / "clean.txt"
    off.write_text("you are an idiot\nwhat a stupid answer\n")
    clean.write_text("thanks for the fix\nworks on the latest branch\n")
    model = tmp_path / "model.json"
    run_cli("train", "--offensive", str(off), "--clean", str(clean),
            "--out", str(model), "--min-df", "1")
    data = tmp_path / "data.jsonl"
    with open(data, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"body": "you are an idiot", "label": 1}) + "\n")
        fh.write(json.dumps({"body": "thanks for the fix", "label": 0}) + "\n")
    proc = run_cli("eval", "--model", str(model), "--data", str(data))
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["accuracy"] == 1.0
