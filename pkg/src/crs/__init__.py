"""CRS: offensive-language detection, classification, highlighting and
paraphrase suggestion for software-engineering community comments."""

from .normalizer import NormalizedText, NormalizeOptions, Token, normalize, strip_code
from .pipeline import AnalysisReport, EngineContext, analyze, render_highlights
from .rules import CLASSES, RuleMatch, RuleSet, classes_of, load_ruleset, scan
from .scoring import ScorerConfig, ToxicityLexicon, ToxicityScore, band, score_local
from .sentiment import SentimentResult, ValenceLexicon, analyze_sentiment

__version__ = "0.1.0"

__all__ = [
    "NormalizedText", "NormalizeOptions", "Token", "normalize", "strip_code",
    "AnalysisReport", "EngineContext", "analyze", "render_highlights",
    "CLASSES", "RuleMatch", "RuleSet", "classes_of", "load_ruleset", "scan",
    "ScorerConfig", "ToxicityLexicon", "ToxicityScore", "band", "score_local",
    "SentimentResult", "ValenceLexicon", "analyze_sentiment",
    "__version__",
]
