"""Exception types shared across the package.

The CLI maps these onto distinct exit codes (usage 1, domain 2, resource 3).
"""


class GraphBellError(Exception):
    """Base class for all library errors."""


class UsageError(GraphBellError):
    """An operation was invoked in a way it cannot accept (bad arguments, malformed input)."""


class DomainError(GraphBellError):
    """A parameter lies outside the mathematical domain of the operation."""


class ResourceError(GraphBellError):
    """A guardrail or capacity limit refused the computation."""
