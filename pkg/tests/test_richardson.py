from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from charsheaves.richardson import (
    CANDIDATES,
    b_C,
    calibrate,
    convention,
    is_richardson,
    nilpotent_support_count,
    odd_order_characters,
    omega_data,
    pi_characters,
    richardson_orbits,
    sl_nilpotent_labels,
)
from charsheaves.syd import AIII_SL, BDI, CI, CII, DIII, OrbitLabel, SymmetricPair, enumerate_syd


def O(text):
    return OrbitLabel.parse(text)


def test_is_richardson_examples():
    assert is_richardson(BDI(3, 0), O("1^3+"))
    assert not is_richardson(CI(2), O("2+ 2-"))
    assert not is_richardson(AIII_SL(1, 1), O("1+ 1-"))


def test_is_richardson_rejects_foreign_orbit():
    with pytest.raises(ValueError):
        is_richardson(CI(2), O("3+ 1-"))


def test_omega_examples():
    a = omega_data(O("3^2+ 1+"))
    assert (a.omega, a.l, a.pi_cardinality) == (frozenset(), 0, 1)
    b = omega_data(O("3^2+ 1^2+"))
    assert (b.omega, b.l, b.pi_cardinality) == (frozenset({1, 2}), 2, 2)
    e = omega_data(O("0"))
    assert (e.omega, e.pi_cardinality) == (frozenset(), 1)


def test_pi_character_examples():
    assert pi_characters(O("3^2+ 1+")) == [(0,)]
    assert len(pi_characters(O("3^2+ 1^2+"))) == 2
    assert pi_characters(O("5^3-")) == [()]


@given(st.integers(1, 11).flatmap(lambda N: st.sampled_from(
    [o for p in range(N + 1) for o in richardson_orbits(BDI(p, N - p))] or [OrbitLabel.parse("1+")])))
def test_pi_count_matches_omega(mu):
    assert len(pi_characters(mu)) == omega_data(mu).pi_cardinality
    assert len(set(pi_characters(mu))) == len(pi_characters(mu))


def test_nilpotent_support_examples():
    assert nilpotent_support_count(CI(2)) == 4
    assert nilpotent_support_count(BDI(3, 0)) == 1
    assert nilpotent_support_count(BDI(0, 0)) == Fraction(1, 2)
    assert nilpotent_support_count(BDI(0, 0), convention="enumeration") == 1
    assert nilpotent_support_count(BDI(3, 3)) == 0


def test_sl_nilpotent_examples():
    got = [(o.text(), psi) for o, psi in sl_nilpotent_labels(1, 1)]
    assert sorted(got) == [("2+", 0), ("2-", 0)]
    on_three = [psi for o, psi in sl_nilpotent_labels(2, 1) if o.text() == "3+"]
    assert on_three == [0, Fraction(1, 3), Fraction(2, 3)]
    assert [(o.text(), psi) for o, psi in sl_nilpotent_labels(1, 0)] == [("1+", 0)]


def test_odd_order_characters():
    assert odd_order_characters(6) == [0, Fraction(1, 3), Fraction(2, 3)]
    assert odd_order_characters(8) == [0]
    assert odd_order_characters(0) == [0]


@given(st.integers(0, 7), st.integers(0, 7))
def test_sl_label_count_equals_nilpotent_count(p, q):
    assert len(sl_nilpotent_labels(p, q)) == nilpotent_support_count(AIII_SL(p, q))


# the calibration -----------------------------------------------------------

def test_calibration_outcome():
    cal = calibrate(13)
    by_label = {c.label(): (ok, bad) for c, ok, bad in cal.results}
    assert len(cal.results) == len(CANDIDATES) == 8
    # every literal reading breaks somewhere
    assert by_label["+->0, compare q, literal"] == (False, 3)
    assert by_label["+->0, compare p, literal"] == (False, 1)
    assert by_label["+->1, compare q, literal"] == (False, 1)
    assert by_label["+->1, compare p, literal"] == (False, 3)
    assert cal.literal_matches == 0
    assert cal.chosen.label() == "+->0, compare q, middle"
    assert by_label["+->1, compare p, middle"] == (True, None)
    assert convention() == cal.chosen


@pytest.mark.parametrize("N", range(14))
def test_biorbital_sums_vs_list_products(N):
    if N % 2:
        target = oracles.biorbital_odd(N)[N]
        total = sum(nilpotent_support_count(BDI(p, N - p)) for p in range(N + 1))
    else:
        target = oracles.biorbital_even(N)[N]
        total = sum(nilpotent_support_count(BDI(p, N - p)) for p in range(0, N + 1, 2))
    assert total == target


@given(st.integers(0, 12), st.integers(0, 12))
def test_b_symmetric(p, q):
    assert nilpotent_support_count(BDI(p, q)) == nilpotent_support_count(BDI(q, p))


@pytest.mark.parametrize("n", range(9))
def test_ci_richardson_vs_filter_oracle(n):
    assert len(richardson_orbits(CI(n))) == len(oracles.ci_richardson_rows(n))


def test_b_c_vs_product():
    want = oracles.b_c_product(20)
    assert [b_C(n) for n in range(21)] == want
    assert want[:5] == [1, 2, 4, 8, 14]


@pytest.mark.parametrize("pair", [CI(4), CII(2, 2), DIII(6), BDI(4, 3), AIII_SL(3, 3)], ids=str)
def test_fast_path_agrees_with_filter(pair):
    direct = tuple(o for o in enumerate_syd(pair) if is_richardson(pair, o, check=False))
    assert set(richardson_orbits(pair)) == set(direct)


def test_cii_diii_rules():
    assert is_richardson(CII(1, 1), O("2+ 2-"))
    assert not is_richardson(CII(1, 1), O("1^2+ 1^2-"))
    for o in richardson_orbits(DIII(4)):
        for L, a, b in o.diagram.rows:
            assert (L % 2 and a == b == 1) or (L % 2 == 0 and a * b == 0)
