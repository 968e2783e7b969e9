"""Exception hierarchy shared by every module and mapped to CLI error JSON."""


class SturmRectError(Exception):
    """Base class; ``code`` is the machine-readable name used by the CLI."""

    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class EmptyQuotients(SturmRectError, ValueError):
    code = "EmptyQuotients"

    def __init__(self):
        super().__init__("a continued fraction needs at least one partial quotient")


class NonPositiveQuotient(SturmRectError, ValueError):
    code = "NonPositiveQuotient"

    def __init__(self, index: int, value):
        self.index = index
        self.value = value
        super().__init__(f"partial quotient a_{index} = {value!r} is not a positive integer")

    def to_json(self) -> dict:
        return {**super().to_json(), "index": self.index}


class AlphaSpecError(SturmRectError, ValueError):
    code = "AlphaSpecError"

    def __init__(self, token: str, reason: str):
        self.token = token
        super().__init__(f"bad alpha spec token {token!r}: {reason}")

    def to_json(self) -> dict:
        return {**super().to_json(), "token": self.token}


class InsufficientDepth(SturmRectError, ArithmeticError):
    """The stored quotient prefix cannot decide the comparison; supply more quotients."""

    code = "InsufficientDepth"


class IndexOutOfRange(SturmRectError, IndexError):
    code = "IndexOutOfRange"


class InvalidA(SturmRectError, ValueError):
    code = "InvalidA"


class ValueTooLargeForDepth(SturmRectError, ValueError):
    code = "ValueTooLargeForDepth"


class InvalidDigits(SturmRectError, ValueError):
    code = "InvalidDigits"

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"digit b_{index}: {reason}")

    def to_json(self) -> dict:
        return {**super().to_json(), "index": self.index}


class ZeroHasNoDigits(SturmRectError, ValueError):
    code = "ZeroHasNoDigits"

    def __init__(self):
        super().__init__("0 has no nonzero Ostrowski digit")


class DistanceCollision(SturmRectError, ValueError):
    """The interval length equals a difference of two points, so f-bijectivity says nothing."""

    code = "DistanceCollision"

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"interval length equals xi_{i} - xi_{j} (mod 1)")


class AmbiguousShift(SturmRectError, ArithmeticError):
    code = "AmbiguousShift"
