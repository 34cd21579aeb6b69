"""Exception hierarchy shared across the package.

``ValidationError`` covers malformed inputs and contract violations and maps
to CLI exit code 1; plain ``OSError`` (missing files etc.) maps to exit
code 2.
"""


class ValidationError(ValueError):
    """Input violates a documented precondition or file-format contract."""


class TooShort(ValidationError):
    """Waveform shorter than the minimum the estimator needs."""


class Degenerate(ValidationError):
    """Point configuration cannot determine a homography."""


class DimMismatch(ValidationError):
    """Array dimensions disagree."""


class TooFewFrames(ValidationError):
    """Not enough frames to produce a single activity sample."""


class IndexOutOfRange(ValidationError):
    """Epoch index outside the span of the series."""


class DegenerateSeries(ValidationError):
    """Series has no usable scale (e.g. 90th percentile is zero)."""


class ShapeMismatch(ValidationError):
    """Network input shape differs from the configured window shape."""


class InsufficientData(ValidationError):
    """Too few recordings for a train/validation split."""


class EmptyInput(ValidationError):
    """Empty training set."""


class NonFiniteFeature(ValidationError):
    """Feature matrix contains NaN or infinity."""


class KTooLarge(ValidationError):
    """More folds requested than recordings available."""


class EmptyMatrix(ValidationError):
    """Confusion matrix has no counts."""


class NeverInBed(ValidationError):
    """Occupancy channel never marks the subject as in bed."""


class LengthMismatch(ValidationError):
    """Paired sequences have different lengths."""
