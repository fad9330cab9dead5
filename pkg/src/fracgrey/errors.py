"""Exception types shared across the package."""


class UsageError(Exception):
    """Bad command-line arguments or run-configuration values."""


class DataError(ValueError):
    """Malformed or invalid input data (files, observation series)."""


class DegenerateParamsError(ValueError):
    """Model parameters unusable: development coefficient too close to zero."""


class SingularDesignError(RuntimeError):
    """Least-squares design matrix is rank deficient."""
