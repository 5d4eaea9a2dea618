"""Error types shared across modules; the CLI maps each to an exit status."""


class PreconditionError(ValueError):
    """An input is well formed but outside an operation's domain."""


class InvariantError(RuntimeError):
    """A mathematical identity that must hold was found to fail."""
