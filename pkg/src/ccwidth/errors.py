"""Exception hierarchy shared across the package."""


class CCWidthError(Exception):
    """Base class for all package errors."""


class SelfLoopError(CCWidthError):
    pass


class IndexOutOfRangeError(CCWidthError):
    pass


class ParseError(CCWidthError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class InvalidCoverError(CCWidthError):
    pass


class NotAPermutationError(CCWidthError):
    pass


class LimitExceededError(CCWidthError):
    pass


class CyclicOrientationError(CCWidthError):
    pass


class NotTransitiveError(CCWidthError):
    pass


class NotIncomparabilityError(CCWidthError):
    pass


class InvalidQueryError(CCWidthError):
    pass


class InvalidArgumentError(CCWidthError):
    pass


class NotAnIntersectionError(CCWidthError):
    pass


class CertificateExtractionError(CCWidthError):
    """Raised when star-certificate extraction cannot complete; indicates a
    broken precondition (orientation not matching the graph's complement)."""
