"""Exception hierarchy shared by every module of the package."""


class GDepError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(GDepError):
    """Malformed input file (CSV team, atom list, structure file)."""


class DomainError(GDepError):
    """A variable, relation or value is used outside the declared domain."""


class SizeError(GDepError):
    """A search or enumeration guard was exceeded."""


class ContractError(GDepError):
    """A precondition of a library call was violated by the caller."""


class ParseError(GDepError):
    """Syntax error in an atom, formula or derivation, with a 0-based offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
