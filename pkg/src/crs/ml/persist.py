"""Versioned JSON round-trip for trained models.

Schema: {"format_version": 1, "kind": "binary"|"multilabel", "loss": str,
"vocab": {"terms", "df", "n_docs"}, "weights", "bias", "trained_on"}.
Multilabel artifacts store weights/bias as objects keyed by class name.
"""

from __future__ import annotations

import json

import numpy as np

from ..errors import CorruptModel, VersionMismatch
from ..rules import CLASSES
from .features import Vocabulary
from .sgd import LinearSGDClassifier, OneVsRestOffenceClassifier

FORMAT_VERSION = 1


def save_model(model, sink) -> None:
    if isinstance(model, OneVsRestOffenceClassifier):
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "multilabel",
            "loss": model.loss,
            "vocab": model.vocab.to_dict(),
            "weights": {c: model.models_[c].weights_.tolist() for c in CLASSES},
            "bias": {c: model.models_[c].bias_ for c in CLASSES},
            "trained_on": model.trained_on_,
        }
    else:
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "binary",
            "loss": model.loss,
            "vocab": model.vocab.to_dict(),
            "weights": model.weights_.tolist(),
            "bias": model.bias_,
            "trained_on": model.trained_on_,
        }
    if hasattr(sink, "write"):
        json.dump(doc, sink)
    else:
        with open(sink, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)


def load_model(source):
    """Returns a LinearSGDClassifier or OneVsRestOffenceClassifier with
    its vocabulary attached."""
    try:
        if hasattr(source, "read"):
            doc = json.load(source)
        else:
            with open(source, encoding="utf-8") as fh:
                doc = json.load(fh)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CorruptModel(str(exc)) from exc
    if not isinstance(doc, dict):
        raise CorruptModel("model artifact is not a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"format_version {version!r}, expected {FORMAT_VERSION}")
    try:
        vocab = Vocabulary.from_dict(doc["vocab"])
        kind = doc["kind"]
        loss = doc["loss"]
        if kind == "binary":
            est = LinearSGDClassifier(loss=loss)
            est.weights_ = np.asarray(doc["weights"], dtype=np.float64)
            est.bias_ = float(doc["bias"])
            est.trained_on_ = doc.get("trained_on", "")
            if est.weights_.shape[0] != vocab.dim:
                raise CorruptModel("weight length does not match vocabulary")
            est.vocab = vocab
            return est
        if kind == "multilabel":
            est = OneVsRestOffenceClassifier(loss=loss)
            est.models_ = {}
            for cls in CLASSES:
                sub = LinearSGDClassifier(loss=loss)
                sub.weights_ = np.asarray(doc["weights"][cls], dtype=np.float64)
                sub.bias_ = float(doc["bias"][cls])
                sub.trained_on_ = doc.get("trained_on", "")
                if sub.weights_.shape[0] != vocab.dim:
                    raise CorruptModel("weight length does not match vocabulary")
                est.models_[cls] = sub
            est.trained_on_ = doc.get("trained_on", "")
            est.vocab = vocab
            return est
        raise CorruptModel(f"unknown kind {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptModel(str(exc)) from exc
