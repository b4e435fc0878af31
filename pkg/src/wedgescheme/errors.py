"""Exception hierarchy shared by every module."""


class WedgeError(Exception):
    """Base class for all library errors."""


class RingMismatch(WedgeError, TypeError):
    pass


class NotAUnit(WedgeError, ArithmeticError):
    pass


class ArityOutOfRange(WedgeError, ValueError):
    pass


class InvalidIndexSet(WedgeError, ValueError):
    pass


class OverlappingIndices(InvalidIndexSet):
    pass


class ShapeMismatch(WedgeError, ValueError):
    pass


class NotInvertible(WedgeError, ArithmeticError):
    pass


class NotInvertibleModulo(NotInvertible):
    pass


class RankTooSmall(WedgeError, ValueError):
    pass


class UnsupportedRing(WedgeError, ValueError):
    pass


class UnsupportedFormat(WedgeError, ValueError):
    pass


class ParseError(WedgeError, ValueError):
    pass
