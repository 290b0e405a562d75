"""Exception hierarchy shared by every module of the package."""


class LefschetzError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LefschetzError, ValueError):
    """Malformed polynomial or presentation text.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.detail = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class MismatchedWeight(LefschetzError, ValueError):
    """Dominance comparison between partitions of different integers."""


class NotArtinian(LefschetzError):
    """The quotient ring is not finite dimensional."""


class NotHomogeneous(LefschetzError):
    def __init__(self, message, generator=None):
        self.generator = generator
        super().__init__(message)


class NotConnected(LefschetzError):
    """The ideal contains a unit, so the quotient is the zero ring."""


class NotInMaximalIdeal(LefschetzError):
    """The element has a nonzero constant term."""


class NotSymmetric(LefschetzError):
    pass


class IndexOutOfRange(LefschetzError, ValueError):
    pass


class HypothesisViolation(LefschetzError):
    pass


class PreconditionViolated(LefschetzError, ValueError):
    pass


class PresentationMismatch(LefschetzError):
    """The fiber ideal does not contain the ideal of the extension."""


class UnsupportedPair(LefschetzError, ValueError):
    pass


class ResourceCapExceeded(LefschetzError):
    def __init__(self, message, dimension=None, cap=None):
        self.dimension = dimension
        self.cap = cap
        super().__init__(message)


class BoundViolation(LefschetzError, AssertionError):
    """A proven dominance bound failed; indicates a bug, never a discovery."""
