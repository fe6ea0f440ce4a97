from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from charsheaves.counts import (
    HECKE_FAMILIES,
    HeckeFamily,
    bipartition_count,
    d,
    e,
    f_even,
    f_odd,
    full_support_count,
    hecke_count,
    p,
    p_distinct_sizes,
)
from charsheaves.syd import AIII_PGL, AIII_SL, BDI, CI, CII, DIII


def test_hecke_examples():
    assert [d(k) for k in range(5)] == [1, 1, 2, 3, 4]
    assert [e(k) for k in range(4)] == [1, 2, 2, 4]
    assert hecke_count(HeckeFamily("B_1_1", 2)) == 5


def test_d_e_vs_strict_partition_oracle():
    # frozen oracle output
    assert [oracles.hecke_d(k) for k in range(10)] == [1, 1, 2, 3, 4, 6, 9, 12, 16, 22]
    assert [oracles.hecke_e(k) for k in range(10)] == [1, 2, 2, 4, 6, 8, 12, 16, 22, 30]
    assert [d(k) for k in range(25)] == [oracles.hecke_d(k) for k in range(25)]
    assert [e(k) for k in range(25)] == [oracles.hecke_e(k) for k in range(25)]


def test_e_even():
    assert all(e(n) % 2 == 0 for n in range(1, 61))


def test_lookup_grows_past_table():
    assert d(100) > 0 and e(130) % 2 == 0
    assert d(-1) == e(-3) == 0


def test_type_d_half_count_integral():
    for k in range(1, 30):
        assert hecke_count(HeckeFamily("D_neg1", k)).denominator == 1
    assert hecke_count(HeckeFamily("D_neg1", 0)) == 1


def test_hecke_family_validation():
    with pytest.raises(ValueError):
        HeckeFamily("B_2_2", 1)
    with pytest.raises(ValueError):
        HeckeFamily("B_1_1", -1)
    assert len(HECKE_FAMILIES) == 5


def test_full_support_examples():
    assert full_support_count(BDI(2, 1)) == 2
    assert full_support_count(BDI(1, 1)) == 2
    assert full_support_count(BDI(0, 0)) == Fraction(1, 2)
    assert full_support_count(BDI(0, 0), convention="enumeration") == 1
    assert f_odd(1) == 2 and f_even(1) == 2


def test_full_support_other_types():
    assert full_support_count(CI(1)) == 3
    assert full_support_count(AIII_SL(2, 2)) == p(2) + bipartition_count(2) == 7
    assert full_support_count(AIII_PGL(2, 2)) == 4
    assert full_support_count(CII(3, 1)) == 1
    assert full_support_count(DIII(5)) == p(2)


def _oneplus_sq(e1, e2, n):
    fs = []
    for k in range(1, n + 1):
        fs += [("plus", e1(k))] * 2 + [("plus", e2(k))] * 2
    return oracles.naive_product(fs, n)


def test_full_support_vs_closed_products():
    B = _oneplus_sq(lambda k: 2 * k, lambda k: k, 30)
    D = _oneplus_sq(lambda k: 2 * k - 1, lambda k: k, 30)
    for q in range(31):
        assert full_support_count(BDI(q + 1, q)) == B[q]
        assert full_support_count(BDI(q + 2, q)) == D[q]
        if q:
            assert 2 * full_support_count(BDI(q, q)) == D[q]


@given(st.integers(0, 20), st.integers(0, 20))
def test_full_support_symmetric(a, b):
    assert full_support_count(BDI(a, b)) == full_support_count(BDI(b, a))


def test_p_distinct_sizes_examples():
    assert p_distinct_sizes(0, 0) == 1
    assert p_distinct_sizes(3, 1) == 2
    assert sum(p_distinct_sizes(2, k) * 2 ** k for k in range(3)) == 4


@given(st.integers(0, 16))
def test_p_distinct_sizes_partition_total(n):
    assert sum(p_distinct_sizes(n, k) for k in range(n + 1)) == p(n)
    weighted = sum(p_distinct_sizes(n, k) * 2 ** k for k in range(n + 1))
    assert weighted == oracles.b_c_product(n)[n]
