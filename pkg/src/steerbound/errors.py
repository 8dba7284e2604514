"""Exception types shared across the toolkit.

The CLI maps each class to a distinct exit code, so input rejection,
enumeration cap overruns, file-schema problems and failed mathematical
certainty checks stay distinguishable.
"""


class SteerboundError(Exception):
    """Base class for all toolkit errors."""


class PreconditionError(SteerboundError, ValueError):
    """An input violates a documented precondition."""


class EnumerationCapExceeded(PreconditionError):
    """A deterministic-strategy enumeration would exceed the configured cap."""


class SchemaError(SteerboundError, ValueError):
    """A file does not match the documented JSON schema."""


class BoundCheckError(SteerboundError, RuntimeError):
    """A computed value violates a bound that must hold mathematically."""
