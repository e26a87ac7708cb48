"""Linear classifiers trained by single-threaded SGD.

Determinism is part of the contract: a fixed seed gives a bitwise-
identical weight vector across runs, so training stays single-threaded
with a fixed reduction order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator

from ..errors import (ClassMissing, DimensionMismatch, EmptyDataset,
                      SingleClassDataset)
from ..rules import CLASSES
from .features import FeatureVector, Vocabulary


@dataclass(frozen=True)
class TrainConfig:
    seed: int = 0
    epochs: int = 10
    learning_rate: float = 0.1
    l2: float = 1e-4

    def __post_init__(self):
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")


class LinearSGDClassifier(BaseEstimator):
    """Binary hinge- or logistic-loss model over FeatureVectors."""

    def __init__(self, loss: str = "hinge", epochs: int = 10,
                 learning_rate: float = 0.1, l2: float = 1e-4, seed: int = 0):
        if loss not in ("hinge", "logistic"):
            raise ValueError(f"unknown loss {loss!r}")
        self.loss = loss
        self.epochs = epochs
        self.learning_rate = learning_rate
        self.l2 = l2
        self.seed = seed

    def fit(self, X: list[FeatureVector], y, trained_on: str = ""):
        labels = set(int(v) for v in y)
        if labels != {0, 1}:
            raise SingleClassDataset(f"need both labels, got {sorted(labels)}")
        dim = X[0].dim
        idx = [np.asarray(fv.indices, dtype=np.intp) for fv in X]
        val = [np.asarray(fv.values, dtype=np.float64) for fv in X]
        signs = np.where(np.asarray(y, dtype=np.float64) > 0, 1.0, -1.0)

        w = np.zeros(dim, dtype=np.float64)
        b = 0.0
        rng = np.random.default_rng(self.seed)
        t = 0
        lr, l2 = self.learning_rate, self.l2
        for _ in range(self.epochs):
            for i in rng.permutation(len(X)):
                t += 1
                eta = lr / (1.0 + lr * l2 * t)
                w *= 1.0 - eta * l2
                z = float(w[idx[i]] @ val[i]) + b
                s = signs[i]
                if self.loss == "hinge":
                    if s * z < 1.0:
                        w[idx[i]] += eta * s * val[i]
                        b += eta * s
                else:
                    p = 1.0 / (1.0 + np.exp(-z))
                    g = p - (s + 1.0) / 2.0
                    w[idx[i]] -= eta * g * val[i]
                    b -= eta * g
        self.weights_ = w
        self.bias_ = b
        self.trained_on_ = trained_on
        return self

    def decision_function(self, fv: FeatureVector) -> float:
        if fv.dim != self.weights_.shape[0]:
            raise DimensionMismatch(
                f"vector dim {fv.dim} != model dim {self.weights_.shape[0]}")
        idx = np.asarray(fv.indices, dtype=np.intp)
        val = np.asarray(fv.values, dtype=np.float64)
        return float(self.weights_[idx] @ val) + self.bias_

    def predict(self, fv: FeatureVector) -> tuple[int, float]:
        margin = self.decision_function(fv)
        return (1 if margin > 0 else 0), margin


class OneVsRestOffenceClassifier(BaseEstimator):
    """Per-class binary models for Personal / Racial / Swearing."""

    def __init__(self, loss: str = "hinge", epochs: int = 10,
                 learning_rate: float = 0.1, l2: float = 1e-4, seed: int = 0):
        self.loss = loss
        self.epochs = epochs
        self.learning_rate = learning_rate
        self.l2 = l2
        self.seed = seed

    def fit(self, X: list[FeatureVector], Y: list[set], trained_on: str = ""):
        self.models_ = {}
        for cls in CLASSES:
            y = [1 if cls in labels else 0 for labels in Y]
            if len(set(y)) < 2:
                raise ClassMissing(cls)
            est = LinearSGDClassifier(self.loss, self.epochs,
                                      self.learning_rate, self.l2, self.seed)
            self.models_[cls] = est.fit(X, y, trained_on=trained_on)
        self.trained_on_ = trained_on
        return self

    def margins(self, fv: FeatureVector) -> dict[str, float]:
        return {cls: m.decision_function(fv) for cls, m in self.models_.items()}

    def predict_classes(self, fv: FeatureVector) -> set[str]:
        """Positive-margin classes; argmax fallback so the set is nonempty.

        Ties break by the fixed order Personal < Racial < Swearing.
        """
        margins = self.margins(fv)
        positive = {cls for cls, m in margins.items() if m > 0}
        if positive:
            return positive
        best = CLASSES[0]
        for cls in CLASSES[1:]:
            if margins[cls] > margins[best]:
                best = cls
        return {best}


def train_binary(dataset, vocab: Vocabulary, cfg: TrainConfig | None = None,
                 loss: str = "hinge") -> LinearSGDClassifier:
    """dataset: sequence of (FeatureVector, label in {0,1})."""
    cfg = cfg or TrainConfig()
    if not dataset:
        raise EmptyDataset("no training examples")
    X = [fv for fv, _ in dataset]
    y = [label for _, label in dataset]
    est = LinearSGDClassifier(loss, cfg.epochs, cfg.learning_rate, cfg.l2, cfg.seed)
    est.fit(X, y, trained_on=f"n={len(X)},dim={vocab.dim}")
    est.vocab = vocab
    return est


def train_multilabel(dataset, vocab: Vocabulary, cfg: TrainConfig | None = None,
                     loss: str = "hinge") -> OneVsRestOffenceClassifier:
    """dataset: sequence of (FeatureVector, set of offence classes)."""
    cfg = cfg or TrainConfig()
    if not dataset:
        raise EmptyDataset("no training examples")
    X = [fv for fv, _ in dataset]
    Y = [labels for _, labels in dataset]
    est = OneVsRestOffenceClassifier(loss, cfg.epochs, cfg.learning_rate,
                                     cfg.l2, cfg.seed)
    est.fit(X, Y, trained_on=f"n={len(X)},dim={vocab.dim}")
    est.vocab = vocab
    return est


def predict(model: LinearSGDClassifier, fv: FeatureVector) -> tuple[int, float]:
    return model.predict(fv)


def predict_classes(mlm: OneVsRestOffenceClassifier, fv: FeatureVector) -> set[str]:
    return mlm.predict_classes(fv)
