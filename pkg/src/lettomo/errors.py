"""Exception types shared across the package."""


class DomainError(ValueError):
    """A query point lies outside the padded model domain."""


class DataError(ValueError):
    """Catalog / dataset content is inconsistent (bad ids, duplicates, NaNs)."""


class ConfigError(ValueError):
    """An experiment configuration failed schema validation."""


class UsageError(ValueError):
    """An operation was called with an unsupported combination of options."""


class SolverError(RuntimeError):
    """A solver produced a non-finite objective or otherwise broke down."""
