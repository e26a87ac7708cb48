from .augment import TrainingCorpus, augment, build_training_corpus, load_stopwords, load_thesaurus
from .evaluate import EvalReport, evaluate
from .features import (FeatureVector, TfidfFeaturizer, Vocabulary, fit_tfidf,
                       vectorize)
from .persist import load_model, save_model
from .sgd import (LinearSGDClassifier, OneVsRestOffenceClassifier, TrainConfig,
                  predict, predict_classes, train_binary, train_multilabel)

__all__ = [
    "TrainingCorpus", "augment", "build_training_corpus", "load_stopwords",
    "load_thesaurus", "EvalReport", "evaluate", "FeatureVector",
    "TfidfFeaturizer", "Vocabulary", "fit_tfidf", "vectorize", "load_model",
    "save_model", "LinearSGDClassifier", "OneVsRestOffenceClassifier",
    "TrainConfig", "predict", "predict_classes", "train_binary",
    "train_multilabel",
]
