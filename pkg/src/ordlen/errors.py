"""Shared exception types."""


class ParseError(ValueError):
    """Malformed textual input; carries a human-readable location."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        if pos is not None:
            message = f"{message} at position {pos} in {text!r}"
        super().__init__(message)
        self.text = text
        self.pos = pos


class GuardError(RuntimeError):
    """A size guard refused a computation that would not finish at desk scale."""
