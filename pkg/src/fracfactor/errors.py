"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid caller input: bad vertices, malformed files, bad parameters."""


class ResourceLimitError(RuntimeError):
    """An exponential-time routine was asked to exceed its configured cap."""


class ConstructionError(RuntimeError):
    """A generated extremal graph failed one of its structural self-checks."""
