"""Exception types shared across the package."""


class PathpackError(Exception):
    """Base class for all package-specific errors."""


class StructuralError(PathpackError):
    """Malformed raw data: dangling endpoints, duplicate ids, self-loops."""


class ParseError(PathpackError):
    """A document could not be parsed; the message names the offending field."""


class SizeLimitError(PathpackError):
    """An enumeration or search would exceed its configured cap; refused outright."""


class PreconditionError(PathpackError):
    """An operation was called on input that violates its stated requirements."""


class NonMaximumFlowError(PreconditionError):
    """The multiflow handed to a locking search is not of maximum size."""


class UnusedEdgeError(PreconditionError):
    """The multiflow handed to a locking search leaves some edge untraversed."""


class NonIntegralMultiplicityError(PathpackError):
    """A matching multiplicity came out non-integral; the message names the pair."""


class TheoremViolationError(PathpackError):
    """A structure whose existence is guaranteed for valid input could not be found."""


class GenerationError(PathpackError):
    """The instance generator exhausted its retry budget."""
