"""Small multiplicative number theory: factorization, Moebius, valuations.

Everything here works on ordinary Python ints.  Trial division is plenty for
the degree ranges that appear (truncation orders in the tens), but the
functions are correct for any positive integer.
"""

from __future__ import annotations

from .errors import UsageError


class FactoredInteger:
    """An integer together with its prime factorization.

    factors is a tuple of (prime, multiplicity) pairs in increasing prime
    order.  Derived quantities (moebius, divisor list) are computed from the
    factorization rather than by re-factoring.
    """

    __slots__ = ("value", "factors")

    def __init__(self, value, factors=None):
        value = int(value)
        if value < 1:
            raise UsageError("positive integers only, got %d" % value)
        if factors is None:
            factors = _trial_division(value)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "factors", tuple(factors))

    def __setattr__(self, name, value):
        raise AttributeError("FactoredInteger is immutable")

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FactoredInteger):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "FactoredInteger(%d, %r)" % (self.value, list(self.factors))

    def moebius(self) -> int:
        for _, mult in self.factors:
            if mult > 1:
                return 0
        return -1 if len(self.factors) % 2 else 1

    def divisors(self):
        """All positive divisors in increasing order."""
        divs = [1]
        for prime, mult in self.factors:
            powers = [prime ** e for e in range(1, mult + 1)]
            divs = [d * q for d in divs for q in [1] + powers]
        return sorted(divs)

    def p_valuation(self, p: int):
        """(nu, m) with value = p^nu * m and p not dividing m."""
        nu = 0
        m = self.value
        for prime, mult in self.factors:
            if prime == p:
                nu = mult
                m = self.value // p ** mult
                break
        return nu, m


def _trial_division(n: int):
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            mult = 0
            while n % d == 0:
                n //= d
                mult += 1
            factors.append((d, mult))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def factorize(n: int) -> FactoredInteger:
    return FactoredInteger(n)


def moebius(n: int) -> int:
    """The Moebius function: 0 on non-squarefree n, else (-1)^(#primes)."""
    return factorize(n).moebius()


def divisors(n: int):
    """Positive divisors of n in increasing order."""
    return factorize(n).divisors()


def p_valuation(n: int, p: int):
    """(nu, m) with n = p^nu * m and gcd(p, m) = 1."""
    if not is_prime(p):
        raise UsageError("p must be prime, got %d" % p)
    if n < 1:
        raise UsageError("positive integers only, got %d" % n)
    nu = 0
    while n % p == 0:
        n //= p
        nu += 1
    return nu, n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _trial_division(n) == [(n, 1)]
