"""Accuracy / precision / recall / F1 from confusion counts."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import EmptyDataset
from .features import FeatureVector
from .sgd import LinearSGDClassifier


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    per_class: dict[str, ClassMetrics]
    confusion: dict[str, int]  # tp / fp / fn / tn

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "per_class": {k: vars(v) for k, v in self.per_class.items()},
            "confusion": dict(self.confusion),
        }


def _metrics(tp: int, fp: int, fn: int) -> ClassMetrics:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)
    return ClassMetrics(precision, recall, f1)


def evaluate(model: LinearSGDClassifier,
             dataset: list[tuple[FeatureVector, int]]) -> EvalReport:
    if not dataset:
        raise EmptyDataset("nothing to evaluate")
    tp = fp = fn = tn = 0
    for fv, label in dataset:
        pred, _ = model.predict(fv)
        if pred == 1 and label == 1:
            tp += 1
        elif pred == 1:
            fp += 1
        elif label == 1:
            fn += 1
        else:
            tn += 1
    total = tp + fp + fn + tn
    return EvalReport(
        accuracy=(tp + tn) / total,
        per_class={
            "offensive": _metrics(tp, fp, fn),
            "clean": _metrics(tn, fn, fp),
        },
        confusion={"tp": tp, "fp": fp, "fn": fn, "tn": tn},
    )
