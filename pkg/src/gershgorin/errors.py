"""Exception hierarchy for the gershgorin package.

``ValueError`` subclasses signal bad inputs (caller mistakes); plain
``GershgorinError`` subclasses signal numerical failures of an otherwise
well-posed computation.
"""


class GershgorinError(Exception):
    """Base class for all package-specific failures."""


class CoefficientOverflowError(GershgorinError):
    """Characteristic-polynomial coefficients overflowed to non-finite values."""


class SpectrumProximityError(GershgorinError):
    """A shift point z sits too close to the spectrum for a stable resolvent."""


class OracleConvergenceError(GershgorinError):
    """The simultaneous root iteration failed to converge."""


class ContourSeparationError(ValueError):
    """Requested inflation would make the contour touch another region."""


class EigenvalueOnContourError(GershgorinError):
    """A sample point of the counting contour hit the spectrum."""


class QuadratureBudgetError(GershgorinError):
    """Adaptive phase tracking exceeded its segment budget."""


class AmbiguousWindingError(GershgorinError):
    """Accumulated phase is too far from a multiple of 2*pi to trust."""


class StepUnderflowError(GershgorinError):
    """Homotopy step-size control fell below its floor."""


class PathEscapeError(GershgorinError):
    """A tracked eigenvalue path left its home region."""


class MatrixFileError(GershgorinError):
    """A matrix input file is malformed."""
