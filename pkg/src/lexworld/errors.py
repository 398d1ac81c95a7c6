"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside an operation's documented domain."""


class ParseError(DomainError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
