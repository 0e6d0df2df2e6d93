"""Exception types shared across the package.

The CLI maps these onto exit codes (config -> 2, data -> 3, numerical -> 4),
so library code should raise the most specific type that applies.
"""


class CitkitError(Exception):
    """Base class for all package-specific errors."""

    exit_code = 1


class ConfigError(CitkitError):
    """Invalid configuration: bad parameter ranges, unknown identifiers."""

    exit_code = 2


class DataError(CitkitError):
    """Malformed or degenerate input data (shape mismatch, NaN cells, ...)."""

    exit_code = 3


class NumericalError(CitkitError):
    """A numerical routine failed to converge to the requested tolerance."""

    exit_code = 4
