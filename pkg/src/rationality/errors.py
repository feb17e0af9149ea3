"""Exception hierarchy shared by every module."""


class RationalityError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RationalityError):
    """Input text is not well-formed."""


class InvariantError(RationalityError):
    """A value violates a structural invariant (e.g. p_ij + p_ji != 1)."""


class CycleError(InvariantError):
    """A relation cannot be closed into a strict partial order."""


class PartitionError(InvariantError):
    """Chains or classes do not partition the candidate set."""


class NotComparable(RationalityError):
    pass


class NotRemovable(RationalityError):
    pass


class DimensionMismatch(RationalityError):
    pass


class ClassError(RationalityError):
    """The matrix is not in the class an operation requires."""


class InconsistentInput(RationalityError):
    pass


class ImproperColoring(RationalityError):
    pass


class InvalidDicoloring(RationalityError):
    pass


class DivisibilityError(RationalityError):
    pass


class SizeLimit(RationalityError):
    """Instance exceeds the configured limit of an exponential algorithm."""
