"""Exception hierarchy.

The CLI maps each family to its own exit status, so new errors should
subclass one of the families below rather than ``BosError`` directly.
"""


class BosError(Exception):
    exit_code = 1


class ParseError(BosError, ValueError):
    exit_code = 2


class MalformedCode(ParseError):
    pass


class ArcMultiplicity(ParseError):
    pass


class Disconnected(BosError, ValueError):
    """The diagram violates the connectedness assumption on its projection."""

    exit_code = 3


class InternalArithmeticError(BosError, ArithmeticError):
    exit_code = 4


class ColoringFailure(InternalArithmeticError):
    pass


class UnitCircuit(InternalArithmeticError):
    """A circuit monomial came out as 1, so a coefficient would be undefined."""


class DivisionByZero(InternalArithmeticError, ZeroDivisionError):
    pass


class SpecializationSingular(BosError, ArithmeticError):
    """A denominator vanished under a specialization; draw new exponents."""

    exit_code = 4


class CertificationFallbackTooLarge(BosError):
    exit_code = 5
