"""Exact truncated power series: arithmetic, inverses, log/exp, and the two
infinite-product constructions with their degree-by-degree inversions.

Golden values used here are classical closed forms (geometric series, Witt
numbers of a rank-2 free Lie algebra) or were frozen from an independent
rational-convolution computation.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from gocha.errors import (
    LogDomainError,
    NotEulerianError,
    NotInvertibleError,
    TruncationMismatchError,
    UsageError,
)
from gocha.series import (
    DEFAULT_TRUNCATION,
    ExponentSequence,
    TruncatedSeries,
    binomial_factor,
    euler_product,
    jennings_product,
    peel_exponents,
    ps_exp,
    ps_inverse,
    ps_log,
    ps_mul,
)

# Witt numbers: lower-central ranks of the free Lie algebra on 2 generators.
WITT_RANK2 = (2, 1, 2, 3, 6, 9, 18, 30)


def random_series(rng, order, constant=None, denom_pool=(1, 1, 1, 2, 3)):
    coeffs = [Fraction(rng.randint(-9, 9), rng.choice(denom_pool))
              for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return TruncatedSeries(coeffs, order)


def test_constructor_pads_short_input_and_rejects_long():
    s = TruncatedSeries([1, 2], 4)
    assert s.coefficients == (1, 2, 0, 0, 0)
    assert s.truncation_order == 4
    assert len(s) == 5
    with pytest.raises(TruncationMismatchError):
        TruncatedSeries([1, 2, 3], 1)
    # default order comes from the coefficient count
    assert TruncatedSeries([1, 2, 3]).truncation_order == 2
    assert DEFAULT_TRUNCATION == 16


def test_series_is_immutable_and_hashable():
    s = TruncatedSeries([1, 2, 3])
    with pytest.raises(AttributeError):
        s.coefficients = (9,)
    assert s == TruncatedSeries([Fraction(1), Fraction(2), Fraction(3)])
    assert hash(s) == hash(TruncatedSeries([1, 2, 3]))
    assert s != TruncatedSeries([1, 2, 3], 5)  # different truncation


def test_addition_subtraction_roundtrip():
    rng = random.Random(101)
    for _ in range(25):
        a = random_series(rng, 8)
        b = random_series(rng, 8)
        assert (a + b) - b == a
        assert a - a == TruncatedSeries.zero(8)
        assert -(-a) == a


def test_mixed_truncation_orders_are_rejected():
    a = TruncatedSeries([1, 2], 3)
    b = TruncatedSeries([1, 2], 4)
    with pytest.raises(TruncationMismatchError):
        a + b
    with pytest.raises(TruncationMismatchError):
        ps_mul(a, b)


def test_multiplication_matches_longhand_convolution():
    rng = random.Random(202)
    for _ in range(20):
        a = random_series(rng, 7)
        b = random_series(rng, 7)
        prod = ps_mul(a, b)
        for n in range(8):
            expected = sum(a[i] * b[n - i] for i in range(n + 1))
            assert prod[n] == expected


def test_inverse_of_geometric_denominator():
    # 1/(1 - 2t) = sum 2^n t^n
    s = ps_inverse(TruncatedSeries([1, -2], 10))
    assert s.coefficients == tuple(2 ** n for n in range(11))


def test_inverse_roundtrip_and_zero_constant_rejected():
    rng = random.Random(303)
    for _ in range(15):
        s = random_series(rng, 9, constant=rng.choice([1, -1, 2, Fraction(1, 2)]))
        assert ps_mul(s, ps_inverse(s)) == TruncatedSeries.one(9)
    with pytest.raises(NotInvertibleError):
        ps_inverse(TruncatedSeries([0, 1], 5))


def test_log_exp_roundtrip():
    rng = random.Random(404)
    for _ in range(15):
        s = random_series(rng, 9, constant=1)
        assert ps_exp(ps_log(s)) == s
    b = random_series(rng, 9, constant=0)
    assert ps_log(ps_exp(b)) == b
    with pytest.raises(LogDomainError):
        ps_log(TruncatedSeries([2, 1], 4))
    with pytest.raises(UsageError):
        ps_exp(TruncatedSeries([1, 1], 4))


def test_log_of_geometric_series_is_harmonic():
    # log(1/(1-t)) = sum t^n / n
    s = ps_log(ps_inverse(TruncatedSeries([1, -1], 8)))
    assert s.coefficients == (0,) + tuple(Fraction(1, n) for n in range(1, 9))


def test_at_minus_t_and_polynomial_degree():
    s = TruncatedSeries([1, 12, 35, 16, 2], 8)
    assert s.at_minus_t().coefficients[:5] == (1, -12, 35, -16, 2)
    assert s.polynomial_degree() == 4
    assert TruncatedSeries.zero(4).polynomial_degree() is None
    assert TruncatedSeries([1, Fraction(1, 2)], 4).is_integral() is False
    assert s.is_integral() is True


def test_binomial_factor_expansions():
    # (1 - t^2)^3 = 1 - 3t^2 + 3t^4 - t^6
    assert binomial_factor(2, 3, 7).coefficients == (1, 0, -3, 0, 3, 0, -1, 0)
    # (1 - t)^(-2) = 1 + 2t + 3t^2 + ...
    assert binomial_factor(1, -2, 5).coefficients == (1, 2, 3, 4, 5, 6)
    # positive and negative exponents multiply to 1
    rng = random.Random(505)
    for _ in range(20):
        step = rng.randint(1, 4)
        e = rng.randint(1, 5)
        prod = ps_mul(binomial_factor(step, e, 12), binomial_factor(step, -e, 12))
        assert prod == TruncatedSeries.one(12)


def test_euler_product_recovers_free_group_growth():
    # prod (1-t^n)^(-a_n) with the rank-2 Witt numbers equals 1/(1-2t)
    a = ExponentSequence(WITT_RANK2, 8)
    assert euler_product(a) == ps_inverse(TruncatedSeries([1, -2], 8))


def test_jennings_product_single_generator():
    # one degree-1 generator at p=2: (1-t^2)/(1-t) = 1 + t
    a = ExponentSequence([1], 6)
    assert jennings_product(a, 2) == TruncatedSeries([1, 1], 6)


def test_peel_ordinary_inverts_euler_product():
    rng = random.Random(606)
    for _ in range(12):
        n = rng.randint(3, 10)
        exps = ExponentSequence([rng.randint(-3, 4) for _ in range(n)], n)
        assert peel_exponents(euler_product(exps), mode="ordinary") == exps


@pytest.mark.parametrize("p", [2, 3, 5])
def test_peel_restricted_inverts_jennings_product(p):
    rng = random.Random(700 + p)
    for _ in range(10):
        n = rng.randint(3, 10)
        exps = ExponentSequence([rng.randint(0, 4) for _ in range(n)], n)
        assert peel_exponents(jennings_product(exps, p),
                              mode="restricted", p=p) == exps


def test_peel_rejects_fractional_exponents():
    c = TruncatedSeries([1, Fraction(1, 2)], 4)
    with pytest.raises(NotEulerianError) as exc:
        peel_exponents(c, mode="ordinary")
    assert exc.value.degree == 1
    with pytest.raises(UsageError):
        peel_exponents(TruncatedSeries([1, 1], 4), mode="restricted")  # missing p
    with pytest.raises(UsageError):
        peel_exponents(TruncatedSeries([1, 1], 4), mode="nonsense")


def test_exponent_sequence_is_one_indexed_and_integral():
    a = ExponentSequence([5, 7, 9])
    assert a[1] == 5 and a[3] == 9
    assert len(a) == 3
    with pytest.raises(IndexError):
        a[0]
    with pytest.raises(IndexError):
        a[4]
    with pytest.raises(UsageError):
        ExponentSequence([Fraction(1, 2)])
    # padding to a longer truncation
    assert ExponentSequence([1], 4).values == (1, 0, 0, 0)
