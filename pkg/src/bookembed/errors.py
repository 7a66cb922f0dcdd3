"""Exception types shared across the package."""

from __future__ import annotations


class BookEmbedError(Exception):
    """Base class for all package errors."""


class GraphFormatError(BookEmbedError):
    """Malformed or semantically invalid graph input.

    ``kind`` is one of ``syntax``, ``self-loop``, ``duplicate-edge``,
    ``non-positive-weight``.  ``line`` / ``position`` locate the offending
    token when the format makes that possible.
    """

    def __init__(self, message, *, kind="syntax", line=None, position=None):
        super().__init__(message)
        self.kind = kind
        self.line = line
        self.position = position

    def __str__(self):
        base = super().__str__()
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"at {self.position}")
        return f"{base} ({', '.join(where)})" if where else base


class PreconditionError(BookEmbedError):
    """An operation was called outside its contract (e.g. disconnected input)."""


class NotOuterplanarError(PreconditionError):
    """Raised by drawers whose input must be outerplanar."""


class NotOnePageError(BookEmbedError):
    """The given vertex order is not a 1-page book-embedding."""

    def __init__(self, edge_a, edge_b):
        super().__init__(f"edges {edge_a} and {edge_b} cross")
        self.edge_a = edge_a
        self.edge_b = edge_b
