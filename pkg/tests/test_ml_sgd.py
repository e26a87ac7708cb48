import numpy as np
import pytest

from crs.errors import ClassMissing, DimensionMismatch, SingleClassDataset
from crs.ml import (FeatureVector, LinearSGDClassifier,
                    OneVsRestOffenceClassifier, TrainConfig, fit_tfidf,
                    predict, predict_classes, train_binary, train_multilabel,
                    vectorize)
from crs.normalizer import normalize
from crs.sentiment import SentimentResult

NEUTRAL = SentimentResult(compound=0.0, label="neutral")

VOCAB_A = ["alpha", "beta", "gamma", "delta"]
VOCAB_B = ["omega", "sigma", "theta", "kappa"]


def separable_dataset(n_per_class=500, seed=7):
    """Two disjoint vocabularies: a perfect linear boundary exists."""
    rng = np.random.default_rng(seed)
    docs, labels = [], []
    for label, words in ((1, VOCAB_A), (0, VOCAB_B)):
        for _ in range(n_per_class):
            k = int(rng.integers(2, 6))
            picks = [words[int(rng.integers(len(words)))] for _ in range(k)]
            docs.append(" ".join(picks))
            labels.append(label)
    norms = [normalize(d) for d in docs]
    vocab = fit_tfidf(norms, min_df=1)
    dataset = [(vectorize(vocab, norm, 0, NEUTRAL), label)
               for norm, label in zip(norms, labels)]
    return dataset, vocab


def split_80_20(dataset, seed=7):
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(dataset))
    cut = int(len(dataset) * 0.8)
    return ([dataset[i] for i in order[:cut]],
            [dataset[i] for i in order[cut:]])


def test_separable_set_reaches_high_heldout_accuracy():
    dataset, vocab = separable_dataset()
    train, test = split_80_20(dataset)
    model = train_binary(train, vocab, TrainConfig(seed=1))
    correct = sum(model.predict(fv)[0] == label for fv, label in test)
    assert correct / len(test) >= 0.95


def test_single_class_dataset_rejected():
    dataset, vocab = separable_dataset(n_per_class=5)
    positives = [(fv, 1) for fv, _ in dataset]
    with pytest.raises(SingleClassDataset):
        train_binary(positives, vocab)


def test_same_seed_gives_bitwise_identical_weights():
    dataset, vocab = separable_dataset(n_per_class=50)
    a = train_binary(dataset, vocab, TrainConfig(seed=3))
    b = train_binary(dataset, vocab, TrainConfig(seed=3))
    assert a.weights_.tobytes() == b.weights_.tobytes()
    assert a.bias_ == b.bias_


def test_logistic_loss_also_learns():
    dataset, vocab = separable_dataset(n_per_class=100)
    train, test = split_80_20(dataset)
    model = train_binary(train, vocab, TrainConfig(seed=1), loss="logistic")
    correct = sum(model.predict(fv)[0] == label for fv, label in test)
    assert correct / len(test) >= 0.95


def _bias_model(bias, dim=8):
    model = LinearSGDClassifier()
    model.weights_ = np.zeros(dim)
    model.bias_ = float(bias)
    return model


def test_predict_zero_vector_negative_bias():
    fv = FeatureVector(indices=(), values=(), dim=8)
    assert predict(_bias_model(-1.0), fv) == (0, -1.0)


def test_predict_rejects_wrong_dimension():
    fv = FeatureVector(indices=(0,), values=(1.0,), dim=5)
    with pytest.raises(DimensionMismatch):
        predict(_bias_model(-1.0, dim=8), fv)


def _fixed_margin_mlm(personal, racial, swearing, dim=8):
    mlm = OneVsRestOffenceClassifier()
    mlm.models_ = {"Personal": _bias_model(personal, dim),
                   "Racial": _bias_model(racial, dim),
                   "Swearing": _bias_model(swearing, dim)}
    return mlm


def test_positive_margins_selected():
    fv = FeatureVector(indices=(), values=(), dim=8)
    mlm = _fixed_margin_mlm(2.0, -1.0, 0.5)
    assert predict_classes(mlm, fv) == {"Personal", "Swearing"}


def test_argmax_fallback_when_no_positive_margin():
    fv = FeatureVector(indices=(), values=(), dim=8)
    mlm = _fixed_margin_mlm(-3.0, -1.0, -2.0)
    assert predict_classes(mlm, fv) == {"Racial"}


def test_tie_breaks_in_fixed_class_order():
    fv = FeatureVector(indices=(), values=(), dim=8)
    mlm = _fixed_margin_mlm(-1.0, -1.0, -1.0)
    assert predict_classes(mlm, fv) == {"Personal"}


def multilabel_dataset(seed=5):
    """Disjoint token per class so each one-vs-rest model separates."""
    rng = np.random.default_rng(seed)
    class_terms = {"Personal": "pword", "Racial": "rword",
                   "Swearing": "sword"}
    docs, labels = [], []
    for cls, term in class_terms.items():
        for _ in range(60):
            filler = ["pad" + str(int(rng.integers(4))) for _ in range(3)]
            docs.append(" ".join(filler + [term]))
            labels.append({cls})
    for _ in range(60):
        docs.append(" ".join("pad" + str(int(rng.integers(4)))
                             for _ in range(4)))
        labels.append(set())
    norms = [normalize(d) for d in docs]
    vocab = fit_tfidf(norms, min_df=1)
    dataset = [(vectorize(vocab, norm, 0, NEUTRAL), labs)
               for norm, labs in zip(norms, labels)]
    return dataset, vocab


def test_multilabel_disjoint_classes_learned():
    dataset, vocab = multilabel_dataset()
    train, test = split_80_20(dataset)
    mlm = train_multilabel(train, vocab, TrainConfig(seed=1))
    correct = 0
    for fv, labels in test:
        margins = mlm.margins(fv)
        hits = sum((margins[cls] > 0) == (cls in labels)
                   for cls in margins)
        correct += hits
    assert correct / (3 * len(test)) >= 0.95


def test_missing_class_positives_rejected():
    dataset, vocab = multilabel_dataset()
    no_racial = [(fv, labs - {"Racial"}) for fv, labs in dataset]
    with pytest.raises(ClassMissing):
        train_multilabel(no_racial, vocab)


def test_multilabel_example_feeds_both_per_class_models():
    dataset, vocab = multilabel_dataset()
    both = [(fv, {"Personal", "Swearing"} if labs else set())
            for fv, labs in dataset]
    # Racial now has no positives: proves membership reached each model
    with pytest.raises(ClassMissing):
        train_multilabel(both, vocab)
