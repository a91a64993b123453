"""Truncated formal power series over the rationals, exactly.

Coefficients are `fractions.Fraction` throughout: the logarithm of an integer
series is genuinely rational (log(1/(1-t)) has b_n = 1/n), so exact rationals
with unbounded integers are the working ring.  There is no floating point
anywhere in this module.

A TruncatedSeries holds coefficients for degrees 0..N inclusive, where N is
the truncation order.  Binary operations require equal truncation orders and
fail fast on a mismatch rather than silently re-truncating; this keeps every
downstream identity check honest about the degree range it covers.

The named operations:

    ps_mul            Cauchy product
    ps_inverse        multiplicative inverse (constant coefficient nonzero)
    ps_log            standard formal logarithm (constant coefficient 1)
    euler_product     prod_n (1 - t^n)^(-a_n), the enveloping-algebra
                      Hilbert series of a graded Lie algebra with ranks a_n
    jennings_product  prod_n ((1 - t^(p n)) / (1 - t^n))^(a_n), the restricted
                      (characteristic p) counterpart
    peel_exponents    inverse of either product, degree by degree

>>> geo = ps_inverse(TruncatedSeries([1, -1], 4))
>>> geo.coefficients
(Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import (
    LogDomainError,
    NotEulerianError,
    NotInvertibleError,
    TruncationMismatchError,
    UsageError,
)

#: Default truncation order used when callers do not override it.
DEFAULT_TRUNCATION = 16


class TruncatedSeries:
    """An exact power series known through degree ``truncation_order``.

    The coefficient tuple always has length ``truncation_order + 1``; a
    shorter input is zero-padded, a longer one is rejected (no silent
    re-truncation).
    """

    __slots__ = ("coefficients", "truncation_order")

    def __init__(self, coefficients, truncation_order=None):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if truncation_order is None:
            if not coeffs:
                raise UsageError("a series needs at least the constant coefficient")
            truncation_order = len(coeffs) - 1
        if truncation_order < 0:
            raise UsageError("truncation order must be >= 0")
        if len(coeffs) > truncation_order + 1:
            raise TruncationMismatchError(
                "%d coefficients do not fit truncation order %d"
                % (len(coeffs), truncation_order))
        if len(coeffs) < truncation_order + 1:
            coeffs = coeffs + (Fraction(0),) * (truncation_order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "truncation_order", truncation_order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- basic protocol ----------------------------------------------------

    def __len__(self):
        return self.truncation_order + 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.truncation_order == other.truncation_order
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash((self.truncation_order, self.coefficients))

    def __repr__(self):
        return "TruncatedSeries(%s, %d)" % (
            [str(c) for c in self.coefficients], self.truncation_order)

    # -- arithmetic sugar (delegates to the module operations) -------------

    def __mul__(self, other):
        return ps_mul(self, other)

    def __add__(self, other):
        _check_orders(self, other)
        return TruncatedSeries(
            [x + y for x, y in zip(self.coefficients, other.coefficients)],
            self.truncation_order)

    def __sub__(self, other):
        _check_orders(self, other)
        return TruncatedSeries(
            [x - y for x, y in zip(self.coefficients, other.coefficients)],
            self.truncation_order)

    def __neg__(self):
        return TruncatedSeries([-x for x in self.coefficients],
                               self.truncation_order)

    # -- helpers ------------------------------------------------------------

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def zero(cls, order):
        return cls([0], order)

    def at_minus_t(self):
        """The series s(-t): odd coefficients change sign."""
        return TruncatedSeries(
            [c if n % 2 == 0 else -c
             for n, c in enumerate(self.coefficients)],
            self.truncation_order)

    def polynomial_degree(self):
        """Index of the last nonzero coefficient, or None for the zero series.

        Meaningful as a polynomial degree only when the tail is known to
        vanish; callers decide that.
        """
        for n in range(self.truncation_order, -1, -1):
            if self.coefficients[n] != 0:
                return n
        return None

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)


class ExponentSequence:
    """Integer exponents/ranks indexed by degree 1..N (degree 0 has none)."""

    __slots__ = ("values", "truncation_order")

    def __init__(self, values, truncation_order=None):
        vals = []
        for v in values:
            f = Fraction(v)
            if f.denominator != 1:
                raise UsageError("exponent sequences hold exact integers, got %s" % v)
            vals.append(int(f))
        vals = tuple(vals)
        if truncation_order is None:
            truncation_order = len(vals)
        if len(vals) > truncation_order:
            raise TruncationMismatchError(
                "%d values do not fit truncation order %d" % (len(vals), truncation_order))
        if len(vals) < truncation_order:
            vals = vals + (0,) * (truncation_order - len(vals))
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "truncation_order", truncation_order)

    def __setattr__(self, name, value):
        raise AttributeError("ExponentSequence is immutable")

    def __len__(self):
        return self.truncation_order

    def __getitem__(self, n):
        # 1-based: entry for degree n
        if not 1 <= n <= self.truncation_order:
            raise IndexError("degree %d outside 1..%d" % (n, self.truncation_order))
        return self.values[n - 1]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, ExponentSequence):
            return NotImplemented
        return (self.truncation_order == other.truncation_order
                and self.values == other.values)

    def __hash__(self):
        return hash((self.truncation_order, self.values))

    def __repr__(self):
        return "ExponentSequence(%r)" % (list(self.values),)


def _check_orders(a, b):
    if a.truncation_order != b.truncation_order:
        raise TruncationMismatchError(
            "truncation orders differ: %d vs %d"
            % (a.truncation_order, b.truncation_order))


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.truncation_order
    ca, cb = a.coefficients, b.coefficients
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = ca[i]
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            if cb[j] != 0:
                out[i + j] += ai * cb[j]
    return TruncatedSeries(out, n)


def ps_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant coefficient."""
    c = s.coefficients
    if c[0] == 0:
        raise NotInvertibleError("series with zero constant term has no inverse")
    n = s.truncation_order
    inv0 = 1 / c[0]
    out = [Fraction(0)] * (n + 1)
    out[0] = inv0
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if c[j] != 0:
                acc += c[j] * out[k - j]
        out[k] = -inv0 * acc
    return TruncatedSeries(out, n)


def ps_log(s: TruncatedSeries) -> TruncatedSeries:
    """Standard formal logarithm of a series with constant coefficient 1.

    Computed through the derivative relation s * log(s)' = s', which stays
    exact and costs O(N^2) rational operations.
    """
    c = s.coefficients
    if c[0] != 1:
        raise LogDomainError("formal log needs constant coefficient 1, got %s" % c[0])
    n = s.truncation_order
    out = [Fraction(0)] * (n + 1)
    # n * out[n] = n * c[n] - sum_{j=1}^{n-1} j * out[j] * c[n - j]
    for k in range(1, n + 1):
        acc = k * c[k]
        for j in range(1, k):
            if out[j] != 0 and c[k - j] != 0:
                acc -= j * out[j] * c[k - j]
        out[k] = Fraction(acc, k)
    return TruncatedSeries(out, n)


def ps_exp(b: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with zero constant coefficient.

    Inverse of ps_log; used to rebuild a dimension series from its logarithm
    when cross-checking the two routes to restricted ranks.
    """
    c = b.coefficients
    if c[0] != 0:
        raise UsageError("formal exp needs zero constant coefficient, got %s" % c[0])
    n = b.truncation_order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    # k * out[k] = sum_{j=1}^{k} j * c[j] * out[k - j]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if c[j] != 0 and out[k - j] != 0:
                acc += j * c[j] * out[k - j]
        out[k] = acc / k
    return TruncatedSeries(out, n)


def binomial_factor(step: int, exponent: int, order: int) -> TruncatedSeries:
    """(1 - t^step)^exponent for any integer exponent, truncated at `order`.

    Closed-form binomial coefficients; handles enormous exponents without
    repeated multiplication.
    """
    if step < 1:
        raise UsageError("factor step must be >= 1")
    out = [Fraction(0)] * (order + 1)
    e = exponent
    for k in range(order // step + 1):
        if e >= 0:
            coeff = comb(e, k) * (-1) ** k if k <= e else 0
        else:
            coeff = comb(-e + k - 1, k)
        out[k * step] = Fraction(coeff)
    return TruncatedSeries(out, order)


def euler_product(a: ExponentSequence) -> TruncatedSeries:
    """prod_{n=1..N} (1 - t^n)^(-a_n) truncated at N.

    Negative exponents are allowed arithmetically; callers who care about
    torsion-freeness inspect the sequence themselves.
    """
    n = a.truncation_order
    acc = TruncatedSeries.one(n)
    for m in range(1, n + 1):
        e = a[m]
        if e != 0:
            acc = ps_mul(acc, binomial_factor(m, -e, n))
    return acc


def jennings_product(a: ExponentSequence, p: int) -> TruncatedSeries:
    """prod_{n=1..N} ((1 - t^(p n)) / (1 - t^n))^(a_n) truncated at N."""
    if p < 2:
        raise UsageError("p must be a prime >= 2")
    n = a.truncation_order
    acc = TruncatedSeries.one(n)
    for m in range(1, n + 1):
        e = a[m]
        if e == 0:
            continue
        acc = ps_mul(acc, binomial_factor(p * m, e, n))
        acc = ps_mul(acc, binomial_factor(m, -e, n))
    return acc


def peel_exponents(c: TruncatedSeries, mode: str = "ordinary",
                   p: int | None = None) -> ExponentSequence:
    """Invert euler_product (mode="ordinary") or jennings_product
    (mode="restricted", with p) degree by degree.

    After dividing out the factors for all degrees below n, the remaining
    quotient is 1 + a_n t^n + O(t^(n+1)); a_n is read off and its factor
    divided out in turn.  A non-integer a_n raises NotEulerianError naming
    the first failing degree.
    """
    if c[0] != 1:
        raise LogDomainError("peeling needs constant coefficient 1, got %s" % c[0])
    if mode == "ordinary":
        if p is not None:
            raise UsageError("ordinary peeling takes no prime")
    elif mode == "restricted":
        if p is None or p < 2:
            raise UsageError("restricted peeling needs a prime p")
    else:
        raise UsageError("mode must be 'ordinary' or 'restricted'")

    n = c.truncation_order
    quotient = c
    out = []
    for m in range(1, n + 1):
        value = quotient[m]
        if value.denominator != 1:
            raise NotEulerianError(m, value)
        e = int(value)
        out.append(e)
        if e != 0:
            if mode == "ordinary":
                # divide by (1 - t^m)^(-e)
                quotient = ps_mul(quotient, binomial_factor(m, e, n))
            else:
                quotient = ps_mul(quotient, binomial_factor(p * m, -e, n))
                quotient = ps_mul(quotient, binomial_factor(m, e, n))
    return ExponentSequence(out, n)
