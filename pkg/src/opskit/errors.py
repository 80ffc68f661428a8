"""Exception hierarchy.

Two families: ``InputError`` covers malformed files and arguments (the CLI
maps these to exit code 2), ``DomainError`` covers well-formed inputs on
which an operation has no answer (exit code 1).
"""


class OpsKitError(Exception):
    """Base class for every error raised by this package."""


class InputError(OpsKitError, ValueError):
    pass


class DomainError(OpsKitError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass


class BadVertexId(ParseError):
    pass


class RaggedRows(ParseError):
    pass


class NonIntegerCell(ParseError):
    pass


class ScoreOutOfScale(ParseError):
    pass


class AsymmetricMatrix(InputError):
    pass


class FiniteDiagonal(InputError):
    pass


class DisconnectedGraph(DomainError):
    pass


class Unreachable(DomainError):
    pass


class TooLarge(DomainError):
    pass


class DegenerateMatrix(DomainError):
    pass


class OutOfRangeRank(DomainError):
    pass


class EmptyMatrix(DomainError):
    pass


class InvalidAlpha(DomainError):
    pass


class InvalidProportion(DomainError):
    pass
