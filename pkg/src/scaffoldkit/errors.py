"""Exception hierarchy shared by all modules."""


class ScaffoldKitError(Exception):
    """Base class."""


class InsufficientPrecision(ScaffoldKitError):
    """A result depends on coefficients hidden beyond a precision cap."""


class SpecError(ScaffoldKitError, ValueError):
    """Invalid extension or job description."""


class NotTotallyRamified(SpecError):
    pass


class BreakDivisibleByP(SpecError):
    pass


class NotAScaffold(ScaffoldKitError):
    """Scaffold condition (iv) fails at precision 1."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class HypothesisViolation(ScaffoldKitError):
    """A valuation hypothesis needed to build a scaffold fails at some (i, t)."""

    def __init__(self, i, t, valuation, expected):
        super().__init__(
            f"hypothesis violation at (i={i}, t={t}): valuation {valuation!r}, expected {expected}"
        )
        self.i, self.t, self.valuation, self.expected = i, t, valuation, expected


class PreconditionError(ScaffoldKitError, ValueError):
    pass


class DiagonalShapeViolation(ScaffoldKitError):
    """An imported structural fact about the diagonal does not hold."""


class ImportedFactViolation(ScaffoldKitError):
    """A computed quantity disagrees with a theorem-predicted value."""

    def __init__(self, what, expected, computed):
        super().__init__(f"{what}: expected {expected!r}, computed {computed!r}")
        self.what, self.expected, self.computed = what, expected, computed


class NotIntegral(ScaffoldKitError):
    """A scaling exponent that must be an integer is not."""


class NotNilpotent(ScaffoldKitError):
    """``Psi_i^p`` is not zero, so the precision cannot be promoted."""
