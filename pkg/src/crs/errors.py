"""Exception hierarchy for the CRS engine.

Grouped by the surface that raises them so the CLI can map families to
exit codes (data errors vs engine errors).
"""


class CrsError(Exception):
    """Base class for all engine errors."""


class DataError(CrsError):
    """Bad input data or artifact files."""


class EngineError(CrsError):
    """Runtime/engine failures (missing artifacts, remote backends)."""


# --- normalizer ---

class InputTooLarge(DataError):
    pass


class InvalidEncoding(DataError):
    pass


# --- rules ---

class ParseError(DataError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DuplicateRuleId(DataError):
    pass


class InvalidPattern(DataError):
    def __init__(self, rule_id, reason):
        super().__init__(f"rule {rule_id!r}: {reason}")
        self.rule_id = rule_id


# --- scoring ---

class RemoteUnavailable(EngineError):
    pass


class RemoteMalformed(EngineError):
    pass


# --- ml ---

class EmptyCorpus(DataError):
    pass


class SizeMismatch(DataError):
    pass


class EmptyInput(DataError):
    pass


class SingleClassDataset(DataError):
    pass


class ClassMissing(DataError):
    def __init__(self, cls):
        super().__init__(f"no positive/negative coverage for class {cls!r}")
        self.cls = cls


class DimensionMismatch(DataError):
    pass


class EmptyDataset(DataError):
    pass


class VersionMismatch(DataError):
    pass


class CorruptModel(DataError):
    pass


# --- paraphrase ---

class RewriterUnavailable(EngineError):
    pass


class RewriterUnsafe(EngineError):
    pass


class UnsafeThesaurus(DataError):
    """A milder-thesaurus alternative matches the active ruleset."""


class NoOffenceFound(CrsError):
    """Paraphrase requested for text with nothing to paraphrase."""


# --- pipeline / service ---

class EngineNotReady(EngineError):
    pass


# --- corpus ---

class UnreadableSource(DataError):
    pass


class UnknownFormat(DataError):
    pass


class InvalidFraction(DataError):
    pass


class InvalidCounts(DataError):
    pass


class EmptyExport(DataError):
    pass


class IdMismatch(DataError):
    pass


class DegenerateMarginals(DataError):
    pass
