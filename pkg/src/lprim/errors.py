"""Exception hierarchy shared by every lprim module."""


class LPrimError(Exception):
    pass


class ParseError(LPrimError, ValueError):
    """Malformed textual input; ``token`` names the offending piece."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class EmptyWord(LPrimError, ValueError):
    pass


class PreconditionViolated(LPrimError, ValueError):
    pass


class NotNumerical(LPrimError, ValueError):
    pass


class EmptyLanguage(LPrimError, ValueError):
    pass


class TrivialSubmonoid(LPrimError, ValueError):
    pass


class BudgetExceeded(LPrimError):
    pass


class UnknownCheck(LPrimError, KeyError):
    def __str__(self):
        return f"unknown check {self.args[0]!r}"
