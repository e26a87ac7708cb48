"""Synonym-replacement augmentation and training-corpus construction.

The training corpus mixes offensive originals with clean originals plus
twice as many augmented clean variants, giving the 1:3 class ratio used
for model building.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyInput, SizeMismatch
from ..normalizer import NormalizedText, normalize


def load_thesaurus(path) -> dict[str, list[str]]:
    """TSV `term<TAB>syn1|syn2|...`."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            term, _, syns = line.partition("\t")
            out[term] = [s for s in syns.split("|") if s]
    return out


def load_stopwords(path) -> set[str]:
    with open(path, encoding="utf-8") as fh:
        return {line.strip() for line in fh
                if line.strip() and not line.startswith("#")}


def augment(norm: NormalizedText, thesaurus: dict[str, list[str]], k: int,
            seed, stopwords: set[str] | None = None) -> str:
    """Replace up to k eligible word tokens by their first synonym.

    Eligible tokens are non-stopword words with a thesaurus entry; the
    selection is drawn from the seed, so identical inputs and seeds give
    identical outputs. Everything outside replaced tokens is preserved.
    """
    if k <= 0:
        return norm.original
    stopwords = stopwords or set()
    eligible = [t for t in norm.word_tokens()
                if t.surface.lower() not in stopwords
                and t.surface.lower() in thesaurus]
    if not eligible:
        return norm.original
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(eligible), size=min(k, len(eligible)), replace=False)
    picked = sorted((eligible[i] for i in chosen), key=lambda t: t.cstart)
    out = []
    pos = 0
    for tok in picked:
        out.append(norm.original[pos:tok.cstart])
        out.append(thesaurus[tok.surface.lower()][0])
        pos = tok.cend
    out.append(norm.original[pos:])
    return "".join(out)


@dataclass
class TrainingCorpus:
    texts: list[str]
    labels: list[int]  # 1 offensive, 0 clean
    n_offensive: int
    n_clean: int

    def __len__(self) -> int:
        return len(self.texts)


def build_training_corpus(offensive: list[str], clean: list[str],
                          thesaurus: dict[str, list[str]], seed: int,
                          k: int = 2, ruleset=None,
                          stopwords: set[str] | None = None) -> TrainingCorpus:
    """offensive(1) + clean(0) + two augmented variants per clean text(0).

    Total is 4x the offensive count. When a ruleset is supplied, any
    augmented text that matches a rule is discarded and replaced by its
    unaugmented source, keeping clean labels safe.
    """
    if not offensive:
        raise EmptyInput("no offensive examples")
    if len(offensive) != len(clean):
        raise SizeMismatch(
            f"{len(offensive)} offensive vs {len(clean)} clean; equal counts required")
    from ..rules import scan  # late import avoids a cycle at module load

    texts = list(offensive) + list(clean)
    labels = [1] * len(offensive) + [0] * len(clean)
    for variant in (0, 1):
        for i, text in enumerate(clean):
            norm = normalize(text)
            aug = augment(norm, thesaurus, k, seed=[seed, variant, i],
                          stopwords=stopwords)
            if ruleset is not None and scan(normalize(aug), ruleset):
                aug = text
            texts.append(aug)
            labels.append(0)
    return TrainingCorpus(texts, labels, n_offensive=len(offensive),
                          n_clean=len(texts) - len(offensive))
