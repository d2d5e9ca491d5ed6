"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: usage errors exit 2, integrity errors
exit 3, resource errors exit 4.
"""


class UsageError(ValueError):
    """The caller passed inputs outside an operation's contract."""


class IntegrityError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


class ResourceError(RuntimeError):
    """An exhaustive scan would exceed the configured budget."""
