"""Shared exception types."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised when a text form (monomial, word, label, ...) cannot be parsed.

    ``position`` is the 0-based offset into the input where the problem was
    detected, or None when no single offset makes sense.
    """

    def __init__(self, message: str, position: int | None = None) -> None:
        if position is not None:
            message = f"at position {position}: {message}"
        super().__init__(message)
        self.position = position
