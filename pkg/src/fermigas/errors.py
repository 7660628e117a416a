"""Exception types shared across the package."""


class FermiGasError(Exception):
    """Base class for all fermigas errors."""


class DomainError(FermiGasError, ValueError):
    """An argument is outside the supported domain of an operation."""


class NumericsError(FermiGasError, RuntimeError):
    """An internal numerical procedure failed to converge or bracket."""
