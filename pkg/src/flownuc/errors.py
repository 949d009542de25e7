"""Exception hierarchy shared across the package."""


class FlownucError(Exception):
    """Base class for all errors raised by flownuc."""


class InputError(FlownucError):
    """Malformed or inconsistent input (files, formulas, constructed objects).

    The CLI maps this to exit code 2.
    """


class LimitError(FlownucError):
    """A configured enumeration limit would be exceeded.

    The CLI maps this to exit code 3.
    """
