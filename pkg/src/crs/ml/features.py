"""TF-IDF vocabulary and feature vectors.

Feature layout: [0..V-1 tf-idf | V regex_flag | V+1 sentiment compound |
V+2..V+4 polarity one-hot]. The tf-idf block is L2-normalized; auxiliary
slots are appended unnormalized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator

from ..errors import EmptyCorpus
from ..normalizer import NormalizedText
from ..sentiment import SentimentResult

POLARITY_ORDER = ("positive", "negative", "neutral")
N_AUX = 5  # regex flag + compound + 3-way polarity one-hot


@dataclass(frozen=True)
class FeatureVector:
    indices: tuple[int, ...]
    values: tuple[float, ...]
    dim: int

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dim)
        out[list(self.indices)] = self.values
        return out


class Vocabulary:
    """Term index plus document frequencies; idf derives from df and N."""

    def __init__(self, terms: list[str], df: list[int], n_docs: int):
        self.terms = list(terms)
        self.index = {t: i for i, t in enumerate(self.terms)}
        self.df = list(df)
        self.n_docs = n_docs
        self._idf = [math.log((1 + n_docs) / (1 + d)) + 1.0 for d in self.df]

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def dim(self) -> int:
        return len(self.terms) + N_AUX

    def idf(self, term: str) -> float:
        return self._idf[self.index[term]]

    def to_dict(self) -> dict:
        return {"terms": self.terms, "df": self.df, "n_docs": self.n_docs}

    @classmethod
    def from_dict(cls, doc: dict) -> "Vocabulary":
        return cls(doc["terms"], doc["df"], doc["n_docs"])


class TfidfFeaturizer(BaseEstimator):
    """sklearn-style wrapper over fit_tfidf/vectorize."""

    def __init__(self, min_df: int = 2):
        self.min_df = min_df

    def fit(self, corpus: list[NormalizedText], y=None):
        self.vocabulary_ = fit_tfidf(corpus, min_df=self.min_df)
        return self

    def transform(self, corpus, regex_flags=None, sentiments=None):
        regex_flags = regex_flags or [0] * len(corpus)
        sentiments = sentiments or [SentimentResult(0.0, "neutral")] * len(corpus)
        return [vectorize(self.vocabulary_, n, r, s)
                for n, r, s in zip(corpus, regex_flags, sentiments)]


def fit_tfidf(corpus: list[NormalizedText], min_df: int = 2) -> Vocabulary:
    """Vocabulary over folded word tokens with document frequency >= min_df."""
    if not corpus:
        raise EmptyCorpus("cannot fit a vocabulary on an empty corpus")
    df: dict[str, int] = {}
    for norm in corpus:
        for term in set(norm.folded_words()):
            df[term] = df.get(term, 0) + 1
    kept = sorted(t for t, d in df.items() if d >= min_df)
    return Vocabulary(kept, [df[t] for t in kept], len(corpus))


def vectorize(vocab: Vocabulary, norm: NormalizedText, regex_flag: int,
              senti: SentimentResult) -> FeatureVector:
    counts: dict[int, int] = {}
    for term in norm.folded_words():
        idx = vocab.index.get(term)
        if idx is not None:
            counts[idx] = counts.get(idx, 0) + 1
    indices = sorted(counts)
    weights = [counts[i] * vocab._idf[i] for i in indices]
    norm2 = math.sqrt(sum(w * w for w in weights))
    if norm2 > 0:
        weights = [w / norm2 for w in weights]

    V = len(vocab)
    out_idx = list(indices)
    out_val = list(weights)
    if regex_flag:
        out_idx.append(V)
        out_val.append(1.0)
    if senti.compound != 0.0:
        out_idx.append(V + 1)
        out_val.append(senti.compound)
    out_idx.append(V + 2 + POLARITY_ORDER.index(senti.label))
    out_val.append(1.0)
    return FeatureVector(tuple(out_idx), tuple(out_val), vocab.dim)
