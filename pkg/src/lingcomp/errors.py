"""Exception types shared across the pipeline stages."""


class LingcompError(Exception):
    """Base class for all toolkit errors."""


class MalformedInput(LingcompError):
    """Source bytes could not be decoded or parsed."""


class MissingBody(LingcompError):
    """A parsed article contains no paragraph text."""


class IoFailure(LingcompError):
    """A corpus file could not be read or written."""


class CorruptRecord(LingcompError):
    """A persisted corpus line failed schema validation.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyCorpus(LingcompError):
    """A training corpus contains no sentences."""


class EmptyDocument(LingcompError):
    """A document has no sentences or no word tokens to measure."""


class InvalidDistribution(LingcompError):
    """An ethnicity probability vector violates its invariants."""


class UnknownEthnicity(LingcompError):
    """A group label was requested for an Unknown ethnicity decision."""


class LookupUnavailable(LingcompError):
    """No ethnicity source could resolve a name (offline and cache miss)."""


class EmptySample(LingcompError):
    """A statistical operation received an empty sample."""


class NonFiniteValue(LingcompError):
    """A statistical operation received NaN or infinity."""


class EmptyGroup(LingcompError):
    """A group summary was requested for a group with no documents."""


class ConfigError(LingcompError):
    """A run configuration is invalid or references missing paths."""
