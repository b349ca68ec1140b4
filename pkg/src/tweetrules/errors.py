"""Exception types shared across the package."""

from __future__ import annotations


class FormatError(ValueError):
    """A resource file (dataset, lexicon, rules, predictions) could not be parsed."""

    def __init__(self, message: str, path: str | None = None, lineno: int | None = None):
        self.path = path
        self.lineno = lineno
        where = ""
        if path is not None:
            where = f"{path}:{lineno}: " if lineno is not None else f"{path}: "
        elif lineno is not None:
            where = f"line {lineno}: "
        super().__init__(where + message)


class CoverageError(ValueError):
    """A prediction stream does not cover exactly the expected ids."""


class StreamCountError(ValueError):
    """An integration strategy received the wrong number of prediction streams."""
