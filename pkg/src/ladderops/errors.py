"""Exception types shared across the package."""


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed: no polynomial quotient exists."""


class DivisionByZero(ZeroDivisionError):
    """A denominator vanished identically."""


class IncomparableKernels(ValueError):
    """Kernel-weighted values cannot be aligned to a common kernel power."""


class NotSymmetric(ValueError):
    """Chart conversion requires a polynomial symmetric under x <-> y."""


class ZeroDenominator(ArithmeticError):
    """A lower Pochhammer factor vanished at a reached summation index."""

    def __init__(self, index, message=""):
        self.index = index
        super().__init__(message or f"lower Pochhammer vanishes at index {index}")


class ParseError(ValueError):
    """Expression could not be parsed; carries position and expected tokens."""

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected: " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class UnknownIdentity(KeyError):
    """No identity with the requested id is registered."""


class BuilderError(RuntimeError):
    """An identity builder failed; wraps the underlying error."""


class DenominatorNearZero(ArithmeticError):
    """Numeric guard: a denominator was too close to zero at the sample."""


class RankUnstable(RuntimeError):
    """Numeric rank could not be decided; singular values near threshold."""
