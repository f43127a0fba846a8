"""Shared exception types."""


class ResourceBudgetError(RuntimeError):
    """A requested computation exceeds the configured memory budget."""


class EvaluationRangeError(ValueError):
    """Evaluation point lies beyond the range the approximant was built for."""


class CacheIntegrityError(RuntimeError):
    """A cached row file failed its checksum or format validation."""
