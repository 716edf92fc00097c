"""Exception types with machine-readable codes.

Every error raised by the library carries a ``code`` (the class name) and
an ``exit_code`` used by the command-line front end:

    2  invalid input (bad prime, bad curve, field too large, ...)
    3  internal assertion (precision or integrality audit failed)
"""


class HyperzetaError(Exception):
    exit_code = 3

    @property
    def code(self):
        return type(self).__name__


class InvalidInput(HyperzetaError):
    exit_code = 2


class InternalAssertion(HyperzetaError):
    exit_code = 3


# ring / field construction
class NotPrime(InvalidInput):
    pass


class EvenCharacteristic(InvalidInput):
    pass


class ReduciblePolynomial(InvalidInput):
    pass


class NotAUnit(HyperzetaError, ArithmeticError):
    exit_code = 3


class DivisionByZero(HyperzetaError, ZeroDivisionError):
    exit_code = 3


class FieldTooLarge(InvalidInput):
    pass


# curve validation
class NotMonic(InvalidInput):
    pass


class WrongDegree(InvalidInput):
    pass


class NotSquarefree(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


# command-line documents and overrides
class MalformedInput(InvalidInput, ValueError):
    pass


class PrecisionTooLow(InvalidInput, ValueError):
    pass


# polynomial arithmetic
class NonUnitLeadingCoefficient(InternalAssertion):
    pass


class InexactDivision(InternalAssertion):
    pass


# pipeline audits
class SanityCheckFailed(InternalAssertion):
    pass


class ConvergenceFailure(InternalAssertion):
    pass


class NonIntegralReduction(InternalAssertion):
    pass


class WeilBoundViolated(InternalAssertion):
    pass


class FunctionalEquationMismatch(InternalAssertion):
    pass


class NegativeCount(InternalAssertion):
    pass
