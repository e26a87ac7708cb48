"""Shared fixtures: the default engine snapshot and input generators."""

import numpy as np
import pytest

from crs.artifacts import load_engine
from crs.normalizer import normalize
from crs.rules import scan
from crs.scoring import score_local

OFFENSIVE_TEMPLATES = [
    "you are such a {}",
    "what a {} answer",
    "stop being a {} about this",
    "only a {} would ship that",
    "this is {} and you know it",
]

CLEAN_TEMPLATES = [
    "thanks, that fixed the build",
    "could you post the stack trace",
    "the docs cover this case",
    "works on the latest branch for me",
    "please add a regression test",
    "nice catch, merging now",
]


@pytest.fixture(scope="session")
def engine():
    return load_engine()


@pytest.fixture(scope="session")
def scored_terms(engine):
    """Ruleset terms that both match a rule and carry a lexicon weight."""
    out = []
    for term in engine.ruleset.terms():
        weight = engine.tox_lexicon.entries.get(term)
        if weight is None:
            continue
        if scan(normalize(term), engine.ruleset):
            out.append((term, weight))
    assert out, "shipped artifacts must share vocabulary"
    return out


def offensive_inputs(engine, scored_terms, count, seed=0):
    """Deterministic offensive texts built from scored ruleset terms."""
    rng = np.random.default_rng(seed)
    texts = []
    while len(texts) < count:
        term = scored_terms[rng.integers(len(scored_terms))][0]
        tpl = OFFENSIVE_TEMPLATES[rng.integers(len(OFFENSIVE_TEMPLATES))]
        text = tpl.format(term)
        norm = normalize(text)
        if scan(norm, engine.ruleset) and \
                score_local(norm, engine.tox_lexicon).value > 0:
            texts.append(text)
    return texts
