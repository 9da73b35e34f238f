"""Exception taxonomy shared across the package.

Validation errors signal inputs that are well-formed but unusable
(bad ranges, dimension clashes, out-of-domain parameters). Parse errors
signal inputs that could not be read in the first place. The CLI maps
these two families to different exit codes.
"""


class WmsdrankError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(WmsdrankError):
    """Input is readable but violates a domain constraint."""


class DegenerateRange(ValidationError):
    def __init__(self, criterion: str, lo: float, hi: float):
        self.criterion = criterion
        self.lo = lo
        self.hi = hi
        super().__init__(
            f"criterion {criterion!r}: degenerate range [{lo}, {hi}]"
        )


class DimensionMismatch(ValidationError):
    pass


class DomainViolation(ValidationError):
    pass


class EpsilonBelowLimit(ValidationError):
    def __init__(self, kind: str, epsilon: float, limit: float):
        self.kind = kind
        self.epsilon = epsilon
        self.limit = limit
        super().__init__(
            f"epsilon={epsilon} for kind {kind} is at or below the "
            f"operational limit {limit:.6g}; pass force to override"
        )


class NonPositiveEpsilon(ValidationError):
    def __init__(self, epsilon: float):
        self.epsilon = epsilon
        super().__init__(f"epsilon must be positive, got {epsilon}")


class ThetaOutOfRange(ValidationError):
    def __init__(self, theta: float):
        self.theta = theta
        super().__init__(f"theta must lie in (0, 1], got {theta}")


class LengthMismatch(ValidationError):
    pass


class MixedScoreKinds(ValidationError):
    pass


class TooManyCriteria(ValidationError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(
            f"{n} criteria exceed the exact-enumeration limit of {limit}; "
            "reduce the criterion count or use a sampled approximation"
        )


class ValueOutOfRange(ValidationError):
    pass


class ParseError(WmsdrankError):
    """CSV/config input could not be read."""

    def __init__(self, reason: str, line: int | None = None,
                 column: int | None = None):
        self.reason = reason
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + reason)


class HeaderMismatch(ParseError):
    pass
