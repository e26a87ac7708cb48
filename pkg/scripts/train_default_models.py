#!/usr/bin/env python3
"""Train and commit the default binary/multilabel model artifacts.

Builds a deterministic synthetic corpus from the shipped ruleset terms
embedded in comment templates, fits the TF-IDF vocabulary and both
classifiers, and writes JSON artifacts into src/crs/data/models/.

Usage: python scripts/train_default_models.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import numpy as np

from crs.artifacts import default_path
from crs.ml import (TrainConfig, fit_tfidf, save_model, train_binary,
                    train_multilabel, vectorize)
from crs.normalizer import normalize
from crs.rules import load_ruleset, scan, classes_of
from crs.scoring import ToxicityLexicon, score_local
from crs.sentiment import ValenceLexicon, analyze_sentiment

SEED = 20260823

OFFENSIVE_TEMPLATES = [
    "you are such a {}",
    "what a {} answer",
    "this {} code never works",
    "stop being a {} about it",
    "only a {} would write this",
    "that comment makes you a {}",
    "{}! read the docs first",
    "seriously, you {}",
]

CLEAN_TEMPLATES = [
    "thanks, that fixed my build",
    "could you share the stack trace please",
    "this answer solved my problem perfectly",
    "the documentation covers this case well",
    "i updated the dependency and it works now",
    "great explanation, very clear and helpful",
    "please post the full error message",
    "the test passes after the patch",
    "which version of the compiler are you using",
    "nice catch, i merged the fix",
    "the config file needs an absolute path",
    "try clearing the cache and rebuilding",
    "i appreciate the detailed review comments",
    "that flag is deprecated in the new release",
    "works for me on the latest branch",
    "good point, i will refactor the module",
]


def main() -> None:
    ruleset = load_ruleset(default_path("ruleset"))
    tox = ToxicityLexicon.load(default_path("tox_lexicon"))
    valence = ValenceLexicon.load(default_path("valence_lexicon"),
                                  default_path("boosters"),
                                  default_path("negators"))
    terms = ruleset.terms()
    rng = np.random.default_rng(SEED)

    texts, labels, class_sets = [], [], []
    for term in terms:
        for _ in range(3):
            tpl = OFFENSIVE_TEMPLATES[rng.integers(len(OFFENSIVE_TEMPLATES))]
            text = tpl.format(term)
            norm = normalize(text)
            matches = scan(norm, ruleset)
            if not matches:
                continue
            texts.append(text)
            labels.append(1)
            class_sets.append(classes_of(matches))
    n_off = len(texts)
    for i in range(n_off):
        tpl = CLEAN_TEMPLATES[rng.integers(len(CLEAN_TEMPLATES))]
        texts.append(f"{tpl} ({i})")
        labels.append(0)
        class_sets.append(set())

    norms = [normalize(t) for t in texts]
    vocab = fit_tfidf(norms, min_df=1)
    features = []
    for norm in norms:
        matches = scan(norm, ruleset)
        senti = analyze_sentiment(norm, valence)
        features.append(vectorize(vocab, norm, 1 if matches else 0, senti))

    cfg = TrainConfig(seed=SEED, epochs=10)
    binary = train_binary(list(zip(features, labels)), vocab, cfg)
    multilabel = train_multilabel(
        [(fv, cs) for fv, cs, lab in zip(features, class_sets, labels) if lab == 1]
        + [(fv, set()) for fv, lab in zip(features, labels) if lab == 0],
        vocab, cfg)

    out = pathlib.Path(default_path("binary_model")).parent
    out.mkdir(parents=True, exist_ok=True)
    save_model(binary, out / "binary_model.json")
    save_model(multilabel, out / "multilabel_model.json")
    correct = sum((binary.predict(fv)[0] == lab)
                  for fv, lab in zip(features, labels))
    print(f"{n_off} offensive / {len(texts) - n_off} clean, "
          f"vocab={len(vocab)}, train accuracy={correct / len(texts):.3f}")


if __name__ == "__main__":
    main()
