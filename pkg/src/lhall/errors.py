"""Exception hierarchy shared by the library and the CLI."""


class LectureHallError(ValueError):
    """Base class for every error raised by :mod:`lhall`."""


class InvalidInput(LectureHallError):
    """A sequence, word or point that is malformed or outside a domain."""


class NotInParallelepiped(InvalidInput):
    """A lattice point that fails one of the membership inequalities.

    ``index`` is the 1-based position of the failing condition (0 when the
    first coordinate is out of range).
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionError(InvalidInput):
    """The operation is only defined for a restricted family of sequences."""


class SizeCapExceeded(LectureHallError):
    """An enumeration would exceed the configured point budget."""
