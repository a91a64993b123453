"""Exception types shared across the package.

Everything raised on purpose derives from GochaError so the command line
front end can map failures to exit codes without guessing.
"""


class GochaError(Exception):
    pass


class UsageError(GochaError):
    """Malformed input or an operation called outside its contract."""


class TruncationMismatchError(UsageError):
    """Binary series operation on operands with different truncation orders."""


class NotInvertibleError(UsageError):
    """Series inversion requires a nonzero constant coefficient."""


class LogDomainError(UsageError):
    """Formal logarithm requires constant coefficient exactly 1."""


class NotEulerianError(GochaError):
    """A peeled exponent came out non-integral.

    Signals that the input series is not the Hilbert series of the
    (restricted) universal envelope of any torsion-free graded Lie algebra.
    """

    def __init__(self, degree, value):
        self.degree = degree
        self.value = value
        super().__init__(
            "non-integer exponent %s at degree %d" % (value, degree))


class NotIntegralError(GochaError):
    """A Moebius-inverted rank came out non-integral (torsion signal)."""

    def __init__(self, degree, value):
        self.degree = degree
        self.value = value
        super().__init__(
            "non-integer rank %s at degree %d" % (value, degree))


class ConventionMismatchError(GochaError):
    """The closed-form Moebius route and the peeling route disagreed.

    Carries both values so the discrepancy is inspectable instead of being
    silently resolved.
    """

    def __init__(self, degree, mobius_value, peel_value):
        self.degree = degree
        self.mobius_value = mobius_value
        self.peel_value = peel_value
        super().__init__(
            "degree %d: mobius route gives %s, peeling route gives %s"
            % (degree, mobius_value, peel_value))


class ResourceCapError(GochaError):
    """The graded-dimension oracle refused a degree beyond its resource cap."""

    def __init__(self, degree, detail):
        self.degree = degree
        self.detail = detail
        super().__init__("resource cap hit at %d: %s" % (degree, detail))


class NotPresentableError(UsageError):
    """A vertex type carries no quadratic presentation to assemble."""


class InvalidVertexError(UsageError):
    """A vertex group invalid for the requested prime (order-2 cyclic needs p=2)."""


class SpecFileError(UsageError):
    """An input description file failed validation."""
