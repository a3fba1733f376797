"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` (the class name) so the
CLI can report it without parsing messages.
"""


class RealCyclesError(ValueError):
    @property
    def code(self) -> str:
        return type(self).__name__


class ZeroPolynomial(RealCyclesError):
    pass


class FieldMismatch(RealCyclesError):
    pass


class TwistMismatch(RealCyclesError):
    pass


class DoubleTwist(RealCyclesError):
    pass


class ZeroEntry(RealCyclesError):
    pass


class EmptySpectrum(RealCyclesError):
    pass


class MalformedPoint(RealCyclesError):
    pass


class NotInIj(RealCyclesError):
    pass


class SupportTooSmall(RealCyclesError):
    pass


class NonTransverse(RealCyclesError):
    pass


class DegenerateSubstitution(RealCyclesError):
    pass


class NotACocycle(RealCyclesError):
    pass


class NotAComplex(RealCyclesError):
    pass


class InconsistentTable(RealCyclesError):
    pass


class DegreeBoundExceeded(RealCyclesError):
    pass


class ParseError(RealCyclesError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, col
        super().__init__(f"{message} (line {line}, column {col})")
