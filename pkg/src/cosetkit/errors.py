"""Exception hierarchy shared by every cosetkit module."""


class CosetkitError(Exception):
    pass


class BadIndex(CosetkitError, ValueError):
    """An integer parameter lies outside its admissible range."""


class BadLabel(CosetkitError, ValueError):
    """A module label violates its parity constraint."""


class IncompatibleOffset(CosetkitError, ValueError):
    """Two series whose exponent offsets differ by a non-integer were combined."""


class NotAUnit(CosetkitError, ZeroDivisionError):
    pass


class SizeLimit(CosetkitError, ValueError):
    pass


class SearchExhausted(CosetkitError, RuntimeError):
    pass


class Inconclusive(CosetkitError, RuntimeError):
    pass


class NumericalInconsistency(CosetkitError, ArithmeticError):
    pass


class TheoryViolation(CosetkitError, AssertionError):
    """A computed object contradicts a statement the toolkit is meant to certify.

    ``record`` carries a JSON-friendly description of the failing check.
    """

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = dict(record or {})
        self.record.setdefault("error", "TheoryViolation")
        self.record.setdefault("message", message)
