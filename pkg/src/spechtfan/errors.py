"""Exceptions shared across the package."""


class CapacityError(ValueError):
    """An enumeration was requested beyond its configured size limit."""


class TheoremViolationError(RuntimeError):
    """A machine-checked identity failed on concrete data."""
