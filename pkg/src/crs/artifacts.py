"""Default shipped artifacts and engine construction.

Every artifact can be overridden by path (or CRS_* environment
variables, used by the CLI and service); the shipped defaults make the
engine usable out of the box.
"""

from __future__ import annotations

import os
from importlib import resources

from .ml.augment import load_stopwords, load_thesaurus
from .ml.persist import load_model
from .normalizer import NormalizeOptions, load_substitutions
from .paraphrase import MilderThesaurus, RewriterClient
from .pipeline import EngineContext
from .rules import load_ruleset
from .scoring import ScorerConfig, ToxicityLexicon
from .sentiment import ValenceLexicon

ENV_PREFIX = "CRS_"

_DATA = resources.files("crs") / "data"


def _data_path(name: str):
    return str(_DATA / name)


def default_path(artifact: str) -> str:
    return {
        "ruleset": _data_path("ruleset.json"),
        "tox_lexicon": _data_path("toxicity_lexicon.tsv"),
        "valence_lexicon": _data_path("valence_lexicon.tsv"),
        "boosters": _data_path("boosters.tsv"),
        "negators": _data_path("negators.txt"),
        "substitutions": _data_path("substitutions.tsv"),
        "thesaurus": _data_path("thesaurus.tsv"),
        "milder_thesaurus": _data_path("milder_thesaurus.tsv"),
        "stopwords": _data_path("stopwords.txt"),
        "binary_model": _data_path("models/binary_model.json"),
        "multilabel_model": _data_path("models/multilabel_model.json"),
    }[artifact]


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def load_engine(
    ruleset_path=None,
    tox_lexicon_path=None,
    valence_lexicon_path=None,
    binary_model_path=None,
    multilabel_model_path=None,
    milder_thesaurus_path=None,
    substitutions_path=None,
    mode: str | None = None,
    remote_scorer_url: str | None = None,
    remote_scorer_key: str | None = None,
    rewriter_url: str | None = None,
) -> EngineContext:
    """Build an immutable engine snapshot from paths, env vars, defaults."""
    ruleset_path = ruleset_path or _env("RULESET", default_path("ruleset"))
    tox_path = tox_lexicon_path or _env("TOX_LEXICON", default_path("tox_lexicon"))
    val_path = valence_lexicon_path or _env("VALENCE_LEXICON",
                                            default_path("valence_lexicon"))
    bin_path = binary_model_path or _env("MODEL", default_path("binary_model"))
    mlm_path = multilabel_model_path or _env("MULTILABEL_MODEL",
                                             default_path("multilabel_model"))
    milder_path = milder_thesaurus_path or _env("THESAURUS",
                                                default_path("milder_thesaurus"))
    subs_path = substitutions_path or _env("SUBSTITUTIONS",
                                           default_path("substitutions"))
    mode = mode or _env("MODE", "sensitive")
    remote_scorer_url = remote_scorer_url or _env("REMOTE_SCORER_URL")
    remote_scorer_key = remote_scorer_key or _env("REMOTE_SCORER_KEY")
    rewriter_url = rewriter_url or _env("REWRITER_URL")

    ruleset = load_ruleset(ruleset_path)
    scorer_cfg = ScorerConfig(
        remote_endpoint=remote_scorer_url,
        api_key_header="X-Api-Key" if remote_scorer_key else None,
        api_key=remote_scorer_key,
    )
    return EngineContext(
        ruleset=ruleset,
        tox_lexicon=ToxicityLexicon.load(tox_path),
        scorer_cfg=scorer_cfg,
        valence_lexicon=ValenceLexicon.load(
            val_path, default_path("boosters"), default_path("negators")),
        binary=load_model(bin_path),
        multilabel=load_model(mlm_path),
        thesaurus=MilderThesaurus.load(milder_path, ruleset),
        mode=mode,
        rewriter=RewriterClient(rewriter_url) if rewriter_url else None,
        normalize_opts=NormalizeOptions(
            substitutions=load_substitutions(subs_path)),
        versions={
            "binary_model": os.path.basename(str(bin_path)),
            "multilabel_model": os.path.basename(str(mlm_path)),
        },
    )


def default_augment_thesaurus():
    return load_thesaurus(default_path("thesaurus"))


def default_stopwords():
    return load_stopwords(default_path("stopwords"))
