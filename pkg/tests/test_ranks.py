"""Rank tables: lower-central ranks by Moebius-Witt inversion, restricted
ranks by three independent routes, and the identity verifier.

Frozen values for the running example family (path graph 2--1--3, three
genus-2 surface groups), from an independent rational-convolution
computation:

    c   : 12, 109, 904, 7223, 56756, 442513, 3437456, 26655167
    b   : 12, 37, 172, 1893/2, 28532/5, 108991/3, 1676708/7, 6470033/4
    aZ  : 12, 31, 168, 928, 5704, 36234, 239528, 1617035
    aF@2: 12, 43, 168, 971, 5704, 36402, 239528, 1618006
    aF@3: 12, 31, 180, 928, 5704, 36265, 239528, 1617035
    aF@5: 12, 31, 168, 928, 5716, 36234, 239528, 1617035

The aF columns differ from aZ exactly at degrees divisible by p, by the
stacked lower-degree terms — visible directly in the table.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from gocha.errors import NotIntegralError, UsageError
from gocha.graph import Graph
from gocha.product import FamilySpec, SurfaceVertex, gocha_series
from gocha.ranks import (
    IdentityReport,
    RankTable,
    a_Fp_lazard,
    a_Fp_mobius,
    a_Fp_peel,
    a_Zp,
    b_from_gocha,
    table_from_gocha,
    verify_identities,
)
from gocha.series import TruncatedSeries, ps_inverse

EXAMPLE_AZ = (12, 31, 168, 928, 5704, 36234, 239528, 1617035)
EXAMPLE_AF = {
    2: (12, 43, 168, 971, 5704, 36402, 239528, 1618006),
    3: (12, 31, 180, 928, 5704, 36265, 239528, 1617035),
    5: (12, 31, 168, 928, 5716, 36234, 239528, 1617035),
}
EXAMPLE_B = (Fraction(12), Fraction(37), Fraction(172), Fraction(1893, 2),
             Fraction(28532, 5), Fraction(108991, 3), Fraction(1676708, 7),
             Fraction(6470033, 4))
WITT_RANK2 = (2, 1, 2, 3, 6, 9, 18, 30)


def example_gocha(p=2, truncation=16):
    spec = FamilySpec(p, Graph(3, [(1, 2), (1, 3)]),
                      (SurfaceVertex(2),) * 3, truncation)
    return gocha_series(spec)


def test_example_table_frozen_values():
    table = table_from_gocha(example_gocha(), 2)
    assert table.c[:8] == (12, 109, 904, 7223, 56756, 442513, 3437456, 26655167)
    assert table.b[:8] == EXAMPLE_B
    assert table.aZ[:8] == EXAMPLE_AZ
    assert table.aF[:8] == EXAMPLE_AF[2]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_restricted_ranks_depend_on_p_and_stack_along_p_powers(p):
    table = table_from_gocha(example_gocha(p), p)
    assert table.aZ[:8] == EXAMPLE_AZ  # aZ never depends on p
    assert table.aF[:8] == EXAMPLE_AF[p]
    for n in range(1, 9):
        if n % p:
            assert table.aF[n - 1] == table.aZ[n - 1]
        else:
            assert table.aF[n - 1] == table.aZ[n - 1] + table.aF[n // p - 1]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_three_routes_to_restricted_ranks_agree(p):
    g = example_gocha(p)
    table = table_from_gocha(g, p)
    assert tuple(a_Fp_peel(g, p)) == table.aF
    assert tuple(a_Fp_mobius(table.b, p)) == table.aF
    assert a_Fp_lazard(table.aZ, p) == table.aF


def test_identity_report_passes_on_the_example():
    for p in (2, 3, 5):
        report = verify_identities(table_from_gocha(example_gocha(p), p))
        assert isinstance(report, IdentityReport)
        assert report.passed
        assert report.failures() == []


def test_free_group_ranks_are_witt_numbers():
    g = ps_inverse(TruncatedSeries([1, -2], 8))
    table = table_from_gocha(g, 2)
    assert table.c == (2, 4, 8, 16, 32, 64, 128, 256)
    assert table.aZ == WITT_RANK2
    # witt numbers satisfy sum_{d|n} d * a_d = 2^n
    for n in (1, 2, 4, 8):
        assert sum(d * table.aZ[d - 1] for d in (1, 2, 4, 8) if n % d == 0
                   and d <= n) == 2 ** n
    assert verify_identities(table).passed


def test_torus_ranks_vanish_above_degree_one():
    # free abelian of rank 2: gocha = 1/(1-t)^2, ranks concentrate in degree 1
    g = ps_inverse(TruncatedSeries([1, -2, 1], 10))
    table = table_from_gocha(g, 3)
    assert table.c == tuple(n + 1 for n in range(1, 11))
    assert table.aZ == (2,) + (0,) * 9
    # restricted ranks at p=3 stack along powers of 3: degrees 1, 3, 9
    assert table.aF == (2, 0, 2, 0, 0, 0, 0, 0, 2, 0)
    assert verify_identities(table).passed


def test_order_two_group_shows_its_torsion():
    # gocha of the order-2 group at p=2 is 1 + t
    g = TruncatedSeries([1, 1], 8)
    table = table_from_gocha(g, 2)
    assert table.aZ == (1, -1, 0, 0, 0, 0, 0, 0)
    assert table.aF == (1, 0, 0, 0, 0, 0, 0, 0)
    report = verify_identities(table)
    assert not report.passed
    assert report.failures() == [("nonneg", 2)]


def test_b_and_a_zp_reject_bad_input():
    assert b_from_gocha(TruncatedSeries([1, 1], 4)) == \
        (1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4))
    with pytest.raises(NotIntegralError) as exc:
        a_Zp([Fraction(1, 2)])
    assert exc.value.degree == 1
    with pytest.raises(NotIntegralError):
        table_from_gocha(TruncatedSeries([1, Fraction(1, 2)], 4), 2)
    with pytest.raises(UsageError):
        table_from_gocha(TruncatedSeries([2, 1], 4), 2)  # constant not 1
    with pytest.raises(UsageError):
        table_from_gocha(TruncatedSeries([1, 1], 4), 6)  # p not prime
    with pytest.raises(UsageError):
        a_Fp_lazard((1, 0), 4)


def test_rank_table_validates_its_columns():
    with pytest.raises(UsageError):
        RankTable(2, 2, (1, 1), (1, Fraction(-1, 2)), (2, 0), (1, 0))  # aZ1 != c1
    with pytest.raises(UsageError):
        RankTable(2, 2, (Fraction(1, 2), 1), (1, 1), (1, 0), (1, 0))  # fractional c
    with pytest.raises(UsageError):
        RankTable(2, 3, (1, 1), (1, 1), (1, 0), (1, 0))  # wrong lengths


def test_verifier_flags_an_injected_fault():
    table = table_from_gocha(example_gocha(truncation=8), 2)
    wrong_aF = list(table.aF)
    wrong_aF[2] += 1  # corrupt degree 3
    bad = RankTable(table.p, table.N, table.c, table.b, table.aZ,
                    tuple(wrong_aF))
    report = verify_identities(bad)
    assert not report.passed
    failures = report.failures()
    assert ("jennings", 3) in failures
    assert ("lazard", 3) in failures
    assert all(name != "euler" for name, _ in failures)  # aZ untouched
