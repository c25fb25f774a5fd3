"""Exception types shared across the package."""


class EulersumError(Exception):
    """Base class for all library errors."""


class DomainError(EulersumError):
    """An argument lies outside the domain an operation supports."""


class PoleError(EulersumError):
    """Evaluation was requested exactly at a pole."""


class ConvergenceError(EulersumError):
    """A numerical routine could not certify the requested tolerance."""
