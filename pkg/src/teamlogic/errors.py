"""Exception hierarchy shared by every module."""


class TeamLogicError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TeamLogicError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SignatureError(TeamLogicError):
    """Unknown symbol or arity mismatch."""


class DialectError(TeamLogicError):
    """A construct is not allowed in the requested logic."""


class CapExceeded(TeamLogicError):
    """An enumeration or search space is larger than the configured cap."""

    def __init__(self, what, count, cap):
        self.what = what
        self.count = count
        self.cap = cap
        super().__init__(f"{what}: {count} exceeds cap {cap}")


class EvaluationError(TeamLogicError):
    """Precondition of an evaluator violated (unbound variable, uninterpreted symbol, ...)."""


class NonMonotoneError(EvaluationError):
    pass


class TranslationError(TeamLogicError):
    pass
