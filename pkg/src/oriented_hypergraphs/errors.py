"""Shared exception types.

The library distinguishes three failure modes: bad input (DomainError),
a configured enumeration budget being exceeded (ResourceLimitError), and
an internal identity that should hold by construction failing to hold
(InvariantError, which always indicates a bug rather than bad input).
"""


class DomainError(ValueError):
    """Input violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured cap."""


class InvariantError(RuntimeError):
    """An internal cross-check failed; this signals an implementation bug."""
