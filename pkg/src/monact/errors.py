"""Exception types shared across the package."""


class MonactError(Exception):
    """Base class for all errors raised by monact."""


class ValidationError(MonactError):
    """An algebraic invariant of a monoid or act does not hold."""


class NotAssociative(ValidationError):
    def __init__(self, x, y, z):
        self.witness = (x, y, z)
        super().__init__(f"multiplication not associative at ({x}, {y}, {z})")


class BadIdentity(ValidationError):
    def __init__(self, x):
        self.witness = x
        super().__init__(f"designated identity fails on {x!r}")


class BadZero(ValidationError):
    def __init__(self, x):
        self.witness = x
        super().__init__(f"designated zero fails on {x!r}")


class ZeroEqualsOne(ValidationError):
    def __init__(self):
        super().__init__("zero and identity coincide")


class DuplicateLabel(ValidationError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"duplicate label {label!r}")


class UniqueZeroViolation(ValidationError):
    def __init__(self, zeros):
        self.zeros = tuple(zeros)
        super().__init__(f"act does not have a unique zero: {self.zeros}")


class MonoidMismatch(MonactError):
    pass


class CategoryMismatch(MonactError):
    pass


class EmptyAct(MonactError):
    pass


class EmptyFamily(MonactError):
    pass


class EmptyGeneratorInAct0(MonactError):
    pass


class NotASubact(MonactError):
    pass


class NotIdempotent(MonactError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"{label!r} is not idempotent")


class LabelClash(MonactError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"label {label!r} already in use")


class BoundTooLarge(MonactError):
    pass


class ParseError(MonactError):
    def __init__(self, message, line, col=1):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownMonoid(MonactError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown monoid {name!r}")


class UnknownAct(MonactError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown act {name!r}")
