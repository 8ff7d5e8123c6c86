"""Exception types shared across the package."""


class ResourceGuardError(ValueError):
    """A request exceeds a configured work ceiling."""


class HookComputationError(RuntimeError):
    """The hook-length formula produced a non-integer tableau count."""
