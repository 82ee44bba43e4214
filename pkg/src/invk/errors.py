"""Exception types shared across the package.

Exit-code mapping for the CLI lives in cli.py; algorithms raise these and
never call sys.exit themselves.
"""


class InvkError(Exception):
    """Base class for all package errors."""


class InputError(InvkError):
    """Malformed user input: bad syntax, unknown variable, schema violation."""


class ParseError(InputError):
    """Syntax error in a polynomial expression."""


class UnsupportedBranchError(InvkError):
    """A computation path the package deliberately does not implement."""


class BudgetExhaustedError(InvkError):
    """A search or iteration cap was reached before the answer was found."""


class ImproperIdealError(InvkError):
    """An ideal that must be proper turned out to contain a unit."""
