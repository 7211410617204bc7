"""Exception types shared across the package.

Everything raised on purpose derives from AffordanceError so callers can
catch one base class. QuerySyntaxError carries a 1-based position and the
token set that would have been accepted there.
"""

from __future__ import annotations


class AffordanceError(Exception):
    """Base class for all errors raised by this package."""


class LoadError(AffordanceError):
    """A file, bundle, or directly constructed value failed validation."""


class NondeterministicSystem(AffordanceError):
    """An object holds more than one value for an attribute."""

    def __init__(self, object_id: str, attribute: str):
        self.object_id = object_id
        self.attribute = attribute
        super().__init__(
            f"object {object_id!r} has more than one value for attribute {attribute!r}"
        )


class MissingValue(AffordanceError):
    """An object holds no value for an attribute."""

    def __init__(self, object_id: str, attribute: str):
        self.object_id = object_id
        self.attribute = attribute
        super().__init__(
            f"object {object_id!r} has no value for attribute {attribute!r}"
        )


class UnknownObject(AffordanceError):
    """An object id does not occur in the table at hand."""

    def __init__(self, object_id: str):
        self.object_id = object_id
        super().__init__(f"unknown object id {object_id!r}")


class SortMismatch(AffordanceError):
    """A value belongs to a different sort than the position requires."""

    def __init__(self, where: str, expected: str, found: str):
        self.where = where
        self.expected = expected
        self.found = found
        super().__init__(f"{where}: expected sort {expected}, found {found}")


class UnknownOperator(AffordanceError):
    """The oracle was asked to evaluate an operator it does not know."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown operator {name!r}")


class UnknownSetName(AffordanceError):
    """A query referenced a set name that was never declared."""

    def __init__(self, name: str, where: str = ""):
        self.name = name
        self.where = where
        suffix = f" at {where}" if where else ""
        super().__init__(f"unknown set name {name!r}{suffix}")


class QuerySyntaxError(AffordanceError):
    """A query could not be parsed.

    line and column are 1-based; expected lists the tokens that would have
    been accepted at that position.
    """

    def __init__(self, line: int, column: int, message: str,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{line}:{column}: {message}"
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(detail)


class UnknownOperatorName(QuerySyntaxError):
    """An identifier in operator position is not an operator name."""

    def __init__(self, line: int, column: int, name: str):
        self.name = name
        super().__init__(line, column, f"unknown operator name {name!r}")
