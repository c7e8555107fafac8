"""Exception hierarchy shared by all subpackages."""

from __future__ import annotations


class NakajimaError(Exception):
    """Base class for every error raised by this package."""


# field layer
class NonPrime(NakajimaError, ValueError):
    pass


class EvenCharacteristic(NakajimaError, ValueError):
    pass


class DegreeOutOfRange(NakajimaError, ValueError):
    pass


class FieldMismatch(NakajimaError, TypeError):
    pass


class DivisionByZero(NakajimaError, ZeroDivisionError):
    pass


# towers and maps
class NonTriangularRelation(NakajimaError, ValueError):
    pass


class ZeroRelation(NakajimaError, ValueError):
    pass


class TowerMismatch(NakajimaError, TypeError):
    pass


class NotInvertible(NakajimaError, ArithmeticError):
    """A nonzero element has no inverse: the relations do not define a field."""


class ZeroInput(NakajimaError, ValueError):
    pass


class EverywhereUnramifiedInput(NakajimaError, ValueError):
    pass


class SearchSpaceTooLarge(NakajimaError, ValueError):
    pass


class ExpressionError(NakajimaError, ValueError):
    pass


# groups
class CapExceeded(NakajimaError, RuntimeError):
    pass


class UnverifiedGenerator(NakajimaError, ValueError):
    pass


class ImageNotInGroup(NakajimaError, ValueError):
    pass


class OrderTooLarge(NakajimaError, ValueError):
    pass


# ramification / counting
class NonIntegralGenus(NakajimaError, ValueError):
    pass


class NonsensePRank(NakajimaError, ValueError):
    pass


class GenusTooSmall(NakajimaError, ValueError):
    pass


class NonIntegralCount(NakajimaError, ArithmeticError):
    pass


# catalog
class UnknownGroup(NakajimaError, KeyError):
    pass


class UnknownCurve(NakajimaError, KeyError):
    pass


class BadParameter(NakajimaError, ValueError):
    pass


class UnknownScenario(NakajimaError, KeyError):
    pass
