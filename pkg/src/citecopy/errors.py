"""Exception hierarchy shared across the package."""


class CitecopyError(Exception):
    """Base class for all domain errors."""


class InvalidTallyError(CitecopyError):
    """Misprint counts violate 0 <= distinct <= total <= citations."""


class InsufficientStatisticsError(CitecopyError):
    """No misprints observed; the estimator has no signal."""


class EstimatorBreakdownError(CitecopyError):
    """Misprint rate too high for the observed propagation factor."""
