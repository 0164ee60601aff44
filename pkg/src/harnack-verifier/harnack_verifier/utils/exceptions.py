"""Exception hierarchy for the verifier.

Every precondition failure raises a subclass of ``HarnackError``. Checks that
come out false on valid input are never raised; they are reported.
"""


class HarnackError(ValueError):
    """Base class for all verifier errors."""

    @property
    def code(self) -> str:
        """Stable identifier used by diagnostics and exit-code mapping."""
        return type(self).__name__


class ShapeMismatch(HarnackError):
    pass


class MatrixFormatError(HarnackError):
    pass


class NotHermitian(HarnackError):
    pass


class NoConvergence(HarnackError):
    pass


class BadRange(HarnackError):
    pass


class LengthMismatch(HarnackError):
    pass


class HypothesisFailed(HarnackError):
    pass


class BadDomain(HarnackError):
    pass


class NotUnitary(HarnackError):
    pass


class StrictContractionRequired(HarnackError):
    pass


class NotPSD(HarnackError):
    pass


class SingularHypothesis(HarnackError):
    pass


class NotStrictContraction(HarnackError):
    pass


class WeightError(HarnackError):
    pass


class UnknownInequality(HarnackError):
    pass
