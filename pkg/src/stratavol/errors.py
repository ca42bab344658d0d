"""Exception hierarchy shared by all stratavol modules."""

from __future__ import annotations


class StratavolError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StratavolError):
    """An argument lies outside the mathematical domain of a function."""


class InvalidSignature(StratavolError):
    """Order vector and differential order are mutually inconsistent."""


class UnsupportedConversion(StratavolError):
    """No normalization formula applies to the given signature."""


class ParseError(StratavolError):
    """A volume table line could not be parsed."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateKey(StratavolError):
    """The same canonical volume key was defined twice."""


class MissingVolume(StratavolError):
    """One or more stratum volumes could not be resolved.

    ``keys`` holds the canonical table lines (``k=...; mu=...``) the user
    must supply, ``context`` an optional graph serialization.
    """

    def __init__(self, keys: list[str], context: str | None = None):
        self.keys = sorted(set(keys))
        self.context = context
        msg = "; ".join(self.keys)
        if context:
            msg += f" [needed by {context}]"
        super().__init__(msg)
