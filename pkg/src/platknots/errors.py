"""Exception types raised across the package."""


class PlatError(Exception):
    """Base class for domain errors; ``code`` is the machine-readable name."""

    code = "PlatError"


class BraidSyntaxError(PlatError, ValueError):
    code = "SyntaxError"


class IndexOutOfRange(PlatError, ValueError):
    code = "IndexOutOfRange"


class OddStrands(PlatError, ValueError):
    code = "OddStrands"


class StrandMismatch(PlatError, ValueError):
    code = "StrandMismatch"


class NotFishnet(PlatError, ValueError):
    code = "NotFishnet"


class NotHighlyTwisted(PlatError, ValueError):
    code = "NotHighlyTwisted"


class WidthTooSmall(PlatError, ValueError):
    code = "WidthTooSmall"


class DimensionMismatch(PlatError, ValueError):
    code = "DimensionMismatch"


class ZeroSeed(PlatError, ValueError):
    code = "ZeroSeed"


class NoConvergence(PlatError, RuntimeError):
    """Iteration budget exhausted; ``estimate`` holds the last value."""

    code = "NoConvergence"

    def __init__(self, message, estimate=None, iterations=None):
        super().__init__(message)
        self.estimate = estimate
        self.iterations = iterations


class NotFourStrands(PlatError, ValueError):
    code = "NotFourStrands"


class NotAKnot(PlatError, ValueError):
    code = "NotAKnot"


class NonCanonicalClass(PlatError, ValueError):
    code = "NonCanonicalClass"


class TooFewStrands(PlatError, ValueError):
    code = "TooFewStrands"


class NotPseudoAnosov(PlatError, ValueError):
    code = "NotPseudoAnosov"


class InsufficientData(PlatError, ValueError):
    code = "InsufficientData"


class UnsupportedFormat(PlatError, ValueError):
    code = "UnsupportedFormat"


class CorruptCache(PlatError, RuntimeError):
    code = "CorruptCache"


class IoError(PlatError, OSError):
    code = "IoError"
