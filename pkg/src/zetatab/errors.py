"""Exception hierarchy shared by every zetatab module."""


class ZetatabError(Exception):
    """Base class for all errors raised by zetatab."""


class PoleError(ZetatabError, ZeroDivisionError):
    """Evaluation requested at a pole of the function."""


class DomainError(ZetatabError, ValueError):
    """Argument outside the supported domain of a special function."""


class ConvergenceError(ZetatabError, ArithmeticError):
    """A series or asymptotic expansion failed to converge."""


class NumericalOverflow(ZetatabError, OverflowError):
    """A result is not representable as a finite double."""


class NonFiniteIntegrand(ZetatabError, ArithmeticError):
    """The integrand produced NaN or Inf at an interior node."""


class UnknownIdentity(ZetatabError, KeyError):
    """No identity with the requested id exists in the registry."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown identity"


class DomainViolation(ZetatabError, ValueError):
    """A parameter point violates an identity's validity domain."""


class EmptyGridAfterDomainFilter(ZetatabError, ValueError):
    """Every point of a sweep grid was rejected by the domain predicate."""
