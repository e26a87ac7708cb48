"""Command-line entry point.

Thin adapters over the library: every subcommand parses arguments,
calls one module operation, and serializes the result. Exit codes:
0 ok, 1 usage, 2 data error, 3 engine error.
"""

from __future__ import annotations

import json
import sys

import click

from . import artifacts
from .corpus import cohen_kappa, ingest, load_annotations, sample, scan_corpus
from .errors import DataError, EngineError
from .ml import (TrainConfig, augment as augment_text, build_training_corpus,
                 evaluate, fit_tfidf, load_model, save_model, train_binary,
                 train_multilabel, vectorize)
from .normalizer import normalize
from .pipeline import analyze, render_highlights
from .rules import classes_of, scan as scan_rules
from .sentiment import analyze_sentiment


@click.group()
def cli():
    """Conflict Reduction System: detect, classify, highlight, paraphrase."""


def _engine(mode=None):
    return artifacts.load_engine(mode=mode)


@cli.command("analyze")
@click.option("--text", default=None, help="Comment text to analyze.")
@click.option("--stdin", "use_stdin", is_flag=True, help="Read text from stdin.")
@click.option("--mode", type=click.Choice(["strict", "sensitive"]), default=None)
@click.option("--json", "output", flag_value="json", default=True)
@click.option("--marked", "output", flag_value="marked")
def analyze_cmd(text, use_stdin, mode, output):
    """Run the four-phase analysis on one comment."""
    if text is None and not use_stdin:
        raise click.UsageError("provide --text or --stdin")
    if use_stdin:
        text = sys.stdin.read()
    report = analyze(text, _engine(), mode=mode)
    if output == "json":
        click.echo(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    else:
        click.echo(render_highlights(text, report.matches, "brackets"))
        for s in report.suggestions:
            flag = " (fallback)" if s.fallback else ""
            click.echo(f"  [{s.strategy}]{flag} {s.text}")


@cli.command("scan")
@click.option("--input", "input_path", required=True)
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl")
@click.option("--fraction", type=float, default=1.0)
@click.option("--seed", type=int, default=0)
@click.option("--mode", type=click.Choice(["strict", "sensitive"]), default=None)
@click.option("--out-stats", "out_stats", default=None)
@click.option("--out-offensive", "out_offensive", default=None)
def scan_cmd(input_path, fmt, fraction, seed, mode, out_stats, out_offensive):
    """Scan a corpus file; write stats and the offensive export."""
    reader = ingest(input_path, fmt)
    stream = reader if fraction >= 1.0 else sample(reader, fraction, seed)
    stats, export = scan_corpus(stream, _engine(), mode=mode)
    stats.skipped = reader.skipped
    if out_stats:
        with open(out_stats, "w", encoding="utf-8") as fh:
            json.dump(stats.to_dict(), fh, indent=2)
    if out_offensive:
        with open(out_offensive, "w", encoding="utf-8") as fh:
            for rec in export:
                fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    click.echo(stats.table())


def _read_lines(path):
    with open(path, encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh if line.strip()]


@cli.command("train")
@click.option("--offensive", "offensive_path", required=True,
              help="Text file, one offensive comment per line.")
@click.option("--clean", "clean_path", required=True,
              help="Text file, one clean comment per line (same count).")
@click.option("--out", "out_path", required=True)
@click.option("--multilabel", "as_multilabel", is_flag=True,
              help="Train the one-vs-rest class model instead (classes from rules).")
@click.option("--seed", type=int, default=0)
@click.option("--epochs", type=int, default=10)
@click.option("--min-df", type=int, default=2)
def train_cmd(offensive_path, clean_path, out_path, as_multilabel, seed,
              epochs, min_df):
    """Build the augmented corpus and train a model."""
    eng = _engine()
    thesaurus = artifacts.default_augment_thesaurus()
    stopwords = artifacts.default_stopwords()
    corpus = build_training_corpus(_read_lines(offensive_path),
                                   _read_lines(clean_path), thesaurus, seed,
                                   ruleset=eng.ruleset, stopwords=stopwords)
    n_clean = corpus.n_clean
    click.echo(f"{len(corpus)} examples ({corpus.n_offensive} offensive / "
               f"{n_clean} non-offensive)")
    norms = [normalize(t) for t in corpus.texts]
    vocab = fit_tfidf(norms, min_df=min_df)
    features = []
    class_sets = []
    for norm in norms:
        matches = scan_rules(norm, eng.ruleset)
        senti = analyze_sentiment(norm, eng.valence_lexicon)
        features.append(vectorize(vocab, norm, 1 if matches else 0, senti))
        class_sets.append(classes_of(matches))
    cfg = TrainConfig(seed=seed, epochs=epochs)
    if as_multilabel:
        model = train_multilabel(list(zip(features, class_sets)), vocab, cfg)
    else:
        model = train_binary(list(zip(features, corpus.labels)), vocab, cfg)
        report = evaluate(model, list(zip(features, corpus.labels)))
        click.echo(f"training accuracy {report.accuracy:.4f}")
    save_model(model, out_path)
    click.echo(f"model written to {out_path}")


@cli.command("eval")
@click.option("--model", "model_path", required=True)
@click.option("--data", "data_path", required=True,
              help="JSONL of {\"body\": str, \"label\": 0|1}.")
def eval_cmd(model_path, data_path):
    """Evaluate a binary model on a labelled JSONL dataset."""
    eng = _engine()
    model = load_model(model_path)
    dataset = []
    with open(data_path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            doc = json.loads(line)
            norm = normalize(doc["body"])
            matches = scan_rules(norm, eng.ruleset)
            senti = analyze_sentiment(norm, eng.valence_lexicon)
            fv = vectorize(model.vocab, norm, 1 if matches else 0, senti)
            dataset.append((fv, int(doc["label"])))
    report = evaluate(model, dataset)
    click.echo(json.dumps(report.to_dict(), indent=2))


@cli.command("augment")
@click.option("--in", "input_path", required=True,
              help="Text file, one comment per line.")
@click.option("--k", type=int, default=2)
@click.option("--seed", type=int, default=0)
def augment_cmd(input_path, k, seed):
    """Print synonym-augmented variants of each input line."""
    thesaurus = artifacts.default_augment_thesaurus()
    stopwords = artifacts.default_stopwords()
    for i, line in enumerate(_read_lines(input_path)):
        click.echo(augment_text(normalize(line), thesaurus, k,
                                seed=[seed, i], stopwords=stopwords))


@cli.command("kappa")
@click.option("--a", "a_path", required=True)
@click.option("--b", "b_path", required=True)
@click.option("--projection", default="offensive",
              type=click.Choice(["offensive", "Personal", "Racial", "Swearing"]))
def kappa_cmd(a_path, b_path, projection):
    """Cohen's kappa between two annotation JSONL files."""
    result = cohen_kappa(load_annotations(a_path), load_annotations(b_path),
                         projection)
    click.echo(f"kappa {result.kappa:.4f} "
               f"(po {result.observed_agreement:.4f}, "
               f"pe {result.expected_agreement:.4f})")


@cli.command("paraphrase")
@click.option("--text", required=True)
def paraphrase_cmd(text):
    """Print the three paraphrase suggestions for an offensive comment."""
    report = analyze(text, _engine())
    if report.verdict != "offensive":
        raise DataError("no offence found")
    for s in report.suggestions:
        flag = " (fallback)" if s.fallback else ""
        click.echo(f"[{s.strategy}]{flag} {s.text}")


@cli.command("serve")
@click.option("--config", "config_path", default=None)
def serve_cmd(config_path):
    """Start the HTTP service (fail-fast if artifacts are missing)."""
    import uvicorn

    from .service import ServiceConfig, create_app

    cfg = ServiceConfig.load(config_path)
    engine = artifacts.load_engine(
        ruleset_path=cfg.ruleset, tox_lexicon_path=cfg.tox_lexicon,
        valence_lexicon_path=cfg.valence_lexicon, binary_model_path=cfg.model,
        multilabel_model_path=cfg.multilabel_model,
        milder_thesaurus_path=cfg.thesaurus, mode=cfg.mode,
        remote_scorer_url=cfg.remote_scorer_url,
        remote_scorer_key=cfg.remote_scorer_key, rewriter_url=cfg.rewriter_url)
    app = create_app(engine, cors_origin=cfg.cors_origin, max_body=cfg.max_body)
    host, _, port = cfg.addr.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8080))


def main() -> None:
    try:
        cli.main(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(1)
    except (OSError, DataError, json.JSONDecodeError) as exc:
        click.echo(f"data error: {exc}", err=True)
        sys.exit(2)
    except EngineError as exc:
        click.echo(f"engine error: {exc}", err=True)
        sys.exit(3)


if __name__ == "__main__":
    main()
