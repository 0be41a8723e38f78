# Every failure the library reports is one of these. The CLI maps `exit_code`.


class TsrError(Exception):
    exit_code = 1


class UsageError(TsrError):
    pass


class ParseError(UsageError):
    pass


class Mismatch(TsrError):
    exit_code = 2


class ResourceError(TsrError):
    exit_code = 3


class CeilingExceeded(ResourceError):
    pass


class Overflow(ResourceError):
    pass


class FactorizationOverflow(Overflow):
    pass


class TooLarge(ResourceError):
    pass


# fields
class NotPrime(TsrError):
    pass


class NotMonic(TsrError):
    pass


class Reducible(TsrError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DivisionByZero(TsrError, ZeroDivisionError):
    pass


class CtxMismatch(TsrError, ValueError):
    pass


class NotASubfield(TsrError):
    pass


class ZeroElement(TsrError):
    pass


# polynomials
class ZeroPolynomial(TsrError):
    pass


class ConstantPolynomial(TsrError):
    pass


class VanishesAtZero(TsrError):
    pass


class BadG(TsrError):
    pass


class BadH(TsrError):
    pass


# matrices
class DimMismatch(TsrError, ValueError):
    pass


class NotSquare(TsrError, ValueError):
    pass


class NotInvertible(TsrError):
    pass


# tsr
class DomainBound(TsrError):
    pass


class WrongDegree(TsrError):
    pass


class WrongDegreeElement(TsrError):
    pass


class NotUniquelyDecomposable(TsrError):
    pass


class InternalInconsistency(TsrError):
    pass


class CoefficientNotInBase(InternalInconsistency):
    pass


class NonIntegerResult(InternalInconsistency):
    pass


# srim
class NotSelfReciprocal(TsrError):
    pass


class NoRepresentation(TsrError):
    pass


class OddDegree(TsrError):
    pass
