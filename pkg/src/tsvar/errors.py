"""Exception types shared across the package."""


class TsvarError(Exception):
    """Base class for all errors raised by tsvar."""


class DegenerateTimeScale(TsvarError):
    """A time scale with too few distinct points for the requested operation."""


class DomainError(TsvarError):
    """A point, interval, or parameter lies outside the operation's domain."""


class ParseError(TsvarError):
    """Malformed expression source.

    `position` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvalError(TsvarError):
    """Expression evaluation failed (division by zero, log of a non-positive value)."""


class SchemaError(TsvarError):
    """A problem file violates the documented schema.

    `path` is a dotted key path such as ``"constraint.target"``.
    """

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{message} [{path}]" if path else message)
        self.path = path


class NonConvergence(TsvarError):
    """No root survived the multi-start solve budget."""


class InfeasibleConstraint(TsvarError):
    """The isoperimetric constraint provably cannot attain its target value."""
