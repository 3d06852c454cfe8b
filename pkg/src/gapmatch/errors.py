"""Exception hierarchy shared by every module of the package."""


class GapMatchError(Exception):
    """Base class for all errors raised by gapmatch."""


class InvalidArgument(GapMatchError, ValueError):
    """An argument violates an operation's precondition."""


class ValidationError(GapMatchError, ValueError):
    """Malformed instance data.

    ``code`` is a short stable identifier (``duplicate-constraint``,
    ``position-range``, ...) used by the CLI diagnostics.
    """

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


class BudgetExhausted(GapMatchError):
    """A search ran out of its step or state budget before deciding."""


class UnsupportedConstraint(GapMatchError):
    """The chosen algorithm cannot handle a constraint type in the instance."""


class UnsupportedStructure(GapMatchError):
    """The constraint set lacks the shape the chosen algorithm requires."""


class TooLarge(GapMatchError):
    """The input exceeds a configured size guard."""
