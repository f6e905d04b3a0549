"""Exception hierarchy.

Every error raised on purpose by the library derives from ``PolyDecError``.
Callers that only care about the broad category can catch
``PreconditionError`` (bad input), ``PolySyntaxError`` (unparsable text) or
``InvariantError`` (an internal consistency check failed, i.e. a bug).
"""


class PolyDecError(Exception):
    pass


class PreconditionError(PolyDecError, ValueError):
    pass


class InvariantError(PolyDecError, AssertionError):
    pass


class PolySyntaxError(PolyDecError):
    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        where = f" at position {position}" if position is not None else ""
        exp = f" (expected {expected})" if expected else ""
        super().__init__(f"{message}{where}{exp}")


class UnknownVariable(PolySyntaxError):
    pass


class NonPrimeModulus(PreconditionError):
    pass


class NotPrime(PreconditionError):
    pass


class FieldMismatch(PreconditionError):
    pass


class ArityMismatch(PreconditionError):
    pass


class NonIntegralCoefficient(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class CharacteristicDividesDegree(PreconditionError):
    pass


class CharacteristicTooSmall(PreconditionError):
    pass


class NotMonic(PreconditionError):
    pass


class NotMonicInX(NotMonic):
    pass


class GNotMonic(NotMonic):
    pass


class NotADivisor(PreconditionError):
    pass


class MNotInvertible(PreconditionError):
    pass


class DegreeTooSmall(PreconditionError):
    pass


class HypothesisViolated(PreconditionError):
    pass


class InputDecomposable(PreconditionError):
    pass


class InputDecomposableAsMultivariate(InputDecomposable):
    def __init__(self, message, exceptional_set=None):
        super().__init__(message)
        self.exceptional_set = exceptional_set


class EmptySampleSet(PreconditionError):
    pass


class SearchSpaceTooLarge(PreconditionError):
    pass
