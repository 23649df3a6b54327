"""Exception hierarchy shared by every module of the package."""


class KleinError(ValueError):
    """Base class for domain errors (the CLI maps these to exit code 2)."""


class ZeroNorm(KleinError):
    """The multivector has (numerically) zero norm and cannot be inverted or normalised."""


class NotAVector(KleinError):
    pass


class NotABlade(KleinError):
    pass


class NotABivector(KleinError):
    pass


class DegenerateInput(KleinError):
    pass


class UndefinedDistance(KleinError):
    pass


class UndefinedAngle(KleinError):
    pass


class NotIncident(KleinError):
    pass


class NullAuxiliary(KleinError):
    pass


class UnsupportedSpace(KleinError):
    pass


class InvalidSpinor(KleinError):
    pass


class WrongGeneratorClass(KleinError):
    pass


class UndrawableBlade(KleinError):
    pass


class RepresentationMismatch(KleinError, TypeError):
    """Raised when model-space and dual-space multivectors are combined."""


class ExpressionSyntaxError(KleinError):
    """Malformed expression text. Carries the byte offset and the expected token set."""

    def __init__(self, offset: int, expected, found: str = ""):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        what = f"unexpected {found!r}" if found else "unexpected end of input"
        super().__init__(f"{what} at offset {offset}; expected one of: {', '.join(self.expected)}")
