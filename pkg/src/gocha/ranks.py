"""Lie-algebra ranks from a gocha series, three ways, with verifiers.

Given the graded dimension series c(t) with c(0) = 1:

    b_n   coefficients of the formal logarithm of c
    aZ_n  = (1/n) sum_{m|n} mu(n/m) m b_m          (lower-central ranks)
    aF_n  Zassenhaus (restricted) ranks, computed by three routes:
            lazard   aF_n = sum_{j=0..v} aZ_{n/p^j},  p^v the p-part of n
            peel     invert the restricted product prod ((1-t^{pn})/(1-t^n))^{a_n}
            mobius   closed form below, cross-checked against peel

The lazard route is the canonical producer; peel and mobius exist to check
it and each other.  The mobius closed form is

    aF_n = (1/n) sum_{d|n} mu(n/d) d (b_{d} + b_{d/p} + ... + b_{d/p^{v_p(d)}})

which is the divisor-sum inversion of the lazard route: substituting
aZ_m = (1/m) sum mu(m/e) e b_e into the lazard sum and collecting terms
telescopes the p-power stack onto each divisor d.  Any disagreement with the
peeled value is raised, never smoothed over: a fractional or mismatched rank
is a torsion signal in the data, not numerical noise.

Integer c_n come in, exact rationals b and integer aZ/aF go out; every
integrality failure names its degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConventionMismatchError,
    NotIntegralError,
    UsageError,
)
from .numtheory import divisors, is_prime, moebius, p_valuation
from .series import (
    ExponentSequence,
    TruncatedSeries,
    euler_product,
    jennings_product,
    peel_exponents,
    ps_exp,
    ps_log,
)


def _exact_int(name, x):
    f = Fraction(x)
    if f.denominator != 1:
        raise UsageError("%s entries must be integers, got %s" % (name, x))
    return int(f)


@dataclass(frozen=True)
class RankTable:
    """All four sequences for degrees 1..N, exactly.

    c holds integers, b exact rationals, aZ and aF integers.  Degree n lives
    at index n-1 of each tuple.
    """

    p: int
    N: int
    c: tuple
    b: tuple
    aZ: tuple
    aF: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise UsageError("p must be prime, got %d" % self.p)
        for name in ("c", "b", "aZ", "aF"):
            seq = tuple(getattr(self, name))
            if len(seq) != self.N:
                raise UsageError("%s has %d entries for N = %d"
                                 % (name, len(seq), self.N))
            object.__setattr__(self, name, seq)
        object.__setattr__(self, "c", tuple(_exact_int("c", x) for x in self.c))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        object.__setattr__(self, "aZ", tuple(_exact_int("aZ", x) for x in self.aZ))
        object.__setattr__(self, "aF", tuple(_exact_int("aF", x) for x in self.aF))
        if self.N >= 1 and not (self.c[0] == self.aZ[0] == self.aF[0]):
            raise UsageError(
                "degree 1 must agree: c=%d, aZ=%d, aF=%d (all are the minimal "
                "generator count)" % (self.c[0], self.aZ[0], self.aF[0]))


@dataclass(frozen=True)
class IdentityReport:
    """Per-degree outcomes of the four identity checks, degrees 1..N.

    euler:    euler_product(aZ) reproduces c
    jennings: jennings_product(aF, p) reproduces c
    lazard:   aF equals the lazard sum of aZ
    nonneg:   aZ_n >= 0 (torsion-free witness)
    """

    p: int
    N: int
    euler: tuple
    jennings: tuple
    lazard: tuple
    nonneg: tuple

    @property
    def passed(self) -> bool:
        return all(self.euler) and all(self.jennings) and all(self.lazard) \
            and all(self.nonneg)

    def failures(self):
        """(check name, degree) pairs for everything that failed."""
        out = []
        for name in ("euler", "jennings", "lazard", "nonneg"):
            for i, ok in enumerate(getattr(self, name)):
                if not ok:
                    out.append((name, i + 1))
        return out


def b_from_gocha(g: TruncatedSeries):
    """Coefficients b_1..b_N of the formal logarithm of the gocha series."""
    return ps_log(g).coefficients[1:]


def a_Zp(b):
    """Lower-central ranks by Moebius-Witt inversion of b_1..b_N.

    A non-integer rank raises NotIntegralError naming its degree; it means
    the input did not come from a torsion-free graded Lie algebra.
    """
    b = [Fraction(x) for x in b]
    out = []
    for n in range(1, len(b) + 1):
        acc = Fraction(0)
        for m in divisors(n):
            acc += moebius(n // m) * m * b[m - 1]
        value = acc / n
        if value.denominator != 1:
            raise NotIntegralError(n, value)
        out.append(int(value))
    return tuple(out)


def a_Fp_lazard(aZ, p: int):
    """Restricted ranks by stacking lower-central ranks along p-powers:
    aF_n = aZ_m + aZ_{mp} + ... + aZ_n  with  n = m p^{v_p(n)}."""
    if not is_prime(p):
        raise UsageError("p must be prime, got %d" % p)
    aZ = [int(x) for x in aZ]
    out = []
    for n in range(1, len(aZ) + 1):
        nu, m = p_valuation(n, p)
        out.append(sum(aZ[m * p ** j - 1] for j in range(nu + 1)))
    return tuple(out)


def a_Fp_peel(c: TruncatedSeries, p: int):
    """Restricted ranks by inverting the restricted envelope product
    prod_n ((1 - t^{pn}) / (1 - t^n))^{a_n} = c, degree by degree."""
    return tuple(peel_exponents(c, mode="restricted", p=p))


def a_Fp_mobius(b, p: int):
    """Restricted ranks by the divisor-sum closed form, cross-checked.

    aF_n = (1/n) sum_{d|n} mu(n/d) d B_d  with  B_d = sum_{j=0}^{v_p(d)} b_{d/p^j}.

    The same b is re-exponentiated into a series and peeled; if the closed
    form and the peeled value ever differ (including a fractional closed-form
    value), ConventionMismatchError reports both at the first bad degree.
    """
    if not is_prime(p):
        raise UsageError("p must be prime, got %d" % p)
    b = [Fraction(x) for x in b]
    N = len(b)

    mob = []
    for n in range(1, N + 1):
        acc = Fraction(0)
        for d in divisors(n):
            nu, _ = p_valuation(d, p)
            stack = sum((b[d // p ** j - 1] for j in range(nu + 1)), Fraction(0))
            acc += moebius(n // d) * d * stack
        mob.append(acc / n)

    log_series = TruncatedSeries([0] + b, N)
    peeled = a_Fp_peel(ps_exp(log_series), p)

    out = []
    for n in range(1, N + 1):
        if mob[n - 1] != peeled[n - 1]:
            raise ConventionMismatchError(n, mob[n - 1], peeled[n - 1])
        out.append(int(mob[n - 1]))
    return tuple(out)


def table_from_gocha(g: TruncatedSeries, p: int) -> RankTable:
    """The full rank table of a gocha series: c, b, aZ, aF (lazard route).

    Non-integer gocha coefficients are rejected up front; they cannot be
    graded dimensions.
    """
    if not is_prime(p):
        raise UsageError("p must be prime, got %d" % p)
    if g[0] != 1:
        raise UsageError("a gocha series has constant coefficient 1, got %s" % g[0])
    N = g.truncation_order
    for n in range(1, N + 1):
        if g[n].denominator != 1:
            raise NotIntegralError(n, g[n])
    c = tuple(int(g[n]) for n in range(1, N + 1))
    b = b_from_gocha(g)
    aZ = a_Zp(b)
    aF = a_Fp_lazard(aZ, p)
    return RankTable(p, N, c, b, aZ, aF)


def verify_identities(table: RankTable) -> IdentityReport:
    """Evaluate all four per-degree identity checks on a finished table.

    Failures land in the report; nothing raises, so injected faults and
    genuinely bad data produce readable diagnostics instead of a stack
    trace.
    """
    N, p = table.N, table.p
    c_series = TruncatedSeries((1,) + table.c, N)
    euler = euler_product(ExponentSequence(table.aZ, N))
    jennings = jennings_product(ExponentSequence(table.aF, N), p)
    lazard = a_Fp_lazard(table.aZ, p)
    return IdentityReport(
        p, N,
        euler=tuple(euler[n] == c_series[n] for n in range(1, N + 1)),
        jennings=tuple(jennings[n] == c_series[n] for n in range(1, N + 1)),
        lazard=tuple(lazard[n - 1] == table.aF[n - 1] for n in range(1, N + 1)),
        nonneg=tuple(table.aZ[n - 1] >= 0 for n in range(1, N + 1)),
    )
