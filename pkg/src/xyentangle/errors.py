"""Exception hierarchy.

Two families: ``NumericError`` for failures of the numerics themselves
(unconverged quadrature, spectra that violate positivity) and
``ValueError`` subclasses for bad input. The CLI maps the first family to
exit code 2 and the second to exit code 1.
"""


class NumericError(ArithmeticError):
    """A computation did not produce a trustworthy number."""


class SubdivisionLimit(NumericError):
    pass


class NonFiniteIntegrand(NumericError):
    pass


class CorrelatorRangeError(NumericError):
    """A correlator left [-1, 1] by more than the allowed slack."""


class PositivityError(NumericError):
    pass


class SpectrumError(NumericError):
    pass


class DomainError(ValueError):
    pass


class InsufficientG(ValueError):
    pass


class ShapeError(ValueError):
    pass


class SizeError(ValueError):
    pass


class SchemaError(ValueError):
    pass
