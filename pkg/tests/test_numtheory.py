"""Factorization and the arithmetic functions behind Moebius-Witt inversion.

Everything here is cross-checked against brute force on seeded random inputs
or against the first values of the classical sequences.
"""

from __future__ import annotations

import random

import pytest

from gocha.errors import UsageError
from gocha.numtheory import (
    FactoredInteger,
    divisors,
    factorize,
    is_prime,
    moebius,
    p_valuation,
)

# mu(1), mu(2), ..., mu(20)
MOEBIUS_FIRST_20 = (1, -1, -1, 0, -1, 1, -1, 0, 0, 1,
                    -1, 0, -1, 1, 1, 0, -1, 0, -1, 0)


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def test_moebius_first_values():
    assert tuple(moebius(n) for n in range(1, 21)) == MOEBIUS_FIRST_20


def test_moebius_is_multiplicative_on_coprime_pairs():
    rng = random.Random(11)
    for _ in range(50):
        a = rng.randint(1, 200)
        b = rng.randint(1, 200)
        if any(a % p == 0 and b % p == 0 for p in range(2, min(a, b) + 1)
               if brute_prime(p)):
            continue
        assert moebius(a * b) == moebius(a) * moebius(b)


def test_divisors_match_brute_force():
    for n in range(1, 80):
        assert list(divisors(n)) == brute_divisors(n)


def test_factorize_reconstructs_and_has_prime_bases():
    rng = random.Random(22)
    for _ in range(40):
        n = rng.randint(1, 10 ** 6)
        f = factorize(n)
        assert isinstance(f, FactoredInteger)
        assert f.value == n
        prod = 1
        for p, e in f.factors:
            assert brute_prime(p)
            assert e >= 1
            prod *= p ** e
        assert prod == n
        # bases strictly increasing
        bases = [p for p, _ in f.factors]
        assert bases == sorted(set(bases))


def test_factored_integer_agrees_with_module_functions():
    for n in (1, 2, 12, 30, 36, 97, 360, 1024):
        f = factorize(n)
        assert f.moebius() == moebius(n)
        assert list(f.divisors()) == brute_divisors(n)


def test_p_valuation_splits_out_the_p_part():
    rng = random.Random(33)
    for _ in range(60):
        n = rng.randint(1, 10 ** 6)
        p = rng.choice([2, 3, 5, 7, 11, 13])
        nu, m = p_valuation(n, p)
        assert n == m * p ** nu
        assert m % p != 0
    assert p_valuation(48, 2) == (4, 3)
    assert p_valuation(7, 7) == (1, 1)
    assert p_valuation(10, 3) == (0, 10)


def test_is_prime_matches_brute_force():
    for n in range(0, 200):
        assert is_prime(n) == brute_prime(n)
    assert is_prime(2 ** 31 - 1)  # Mersenne prime


def test_nonpositive_inputs_are_rejected():
    with pytest.raises(UsageError):
        factorize(0)
    with pytest.raises(UsageError):
        moebius(-5)
    with pytest.raises(UsageError):
        divisors(0)
    with pytest.raises(UsageError):
        p_valuation(12, 4)  # p must be prime
