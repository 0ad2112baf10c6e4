"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function (e.g. ``|z| >= 1``)."""


class ParameterError(ValueError):
    """Invalid or inconsistent model/series parameters."""


class ConvergenceError(RuntimeError):
    """A truncated series hit its term cap before meeting the stopping rule."""


class ConfigError(ValueError):
    """Invalid verification-suite or CLI configuration."""
