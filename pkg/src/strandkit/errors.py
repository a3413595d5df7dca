"""Exception hierarchy.

``InputError`` subclasses signal malformed user input (CLI exit code 2).
The remaining errors flag misuse of the library on well-formed data.
"""


class StrandkitError(Exception):
    """Base class for every error raised by strandkit."""


class InputError(StrandkitError):
    """Malformed datum, word, arc or option."""


class DuplicatePartner(InputError):
    pass


class MissingPartner(InputError):
    pass


class GradingLengthMismatch(InputError):
    pass


class NonPositiveSize(InputError):
    pass


class IndexOutOfPolygon(InputError):
    pass


class InvalidMarker(InputError):
    pass


class BrokenAdjacency(InputError):
    def __init__(self, position, message=None):
        self.position = position
        super().__init__(message or f"adjacency fails between letters {position} and {position + 1}")


class GradingViolation(InputError):
    """An interior segment whose two gradings disagree with the polygon grading."""


class NonMinimalPeriod(InputError):
    pass


class TagCountMismatch(InputError):
    pass


class BandNotArc(InputError):
    pass


class NotArcObject(InputError):
    pass


class IncompatibleLocalSystem(InputError):
    pass


class RotateOnFinite(InputError):
    pass


class UnknownExample(InputError):
    pass


class CapExceeded(InputError):
    pass


class NotACocycle(StrandkitError):
    pass


class CaseMismatch(StrandkitError):
    pass


class TypeMismatch(StrandkitError):
    pass
