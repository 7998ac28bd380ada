"""Exception hierarchy for cascade_lab."""


class CascadeLabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(CascadeLabError, ValueError):
    """The (family, rank) pair does not name a simple Lie algebra we construct."""


class InvalidRoot(CascadeLabError, ValueError):
    """A coefficient vector is not a root of the given system."""


class EmptyT(CascadeLabError, ValueError):
    """The empty set of simple roots gives the zero nilradical, which is excluded."""


class InvalidSimpleRoot(CascadeLabError, ValueError):
    """A simple-root label outside 1..rank."""


class WrongType(CascadeLabError, ValueError):
    """An operation restricted to one family was called on another."""


class InternalInconsistency(CascadeLabError, AssertionError):
    """Two computations that must agree did not. Always a bug."""


class CriterionMismatch(InternalInconsistency):
    """The quasi-quadratic criterion and the semiradical closure disagree."""
