from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from charsheaves.orbits import (
    ComponentGroup,
    SupportLabel,
    component_group,
    fundamental_group_descriptor,
    orbital_complex_count,
    r_bdi,
    support_set,
)
from charsheaves.richardson import is_richardson, richardson_orbits
from charsheaves.syd import (
    AIII_PGL,
    AIII_SL,
    BDI,
    CI,
    CII,
    DIII,
    OrbitLabel,
    SignedYoungDiagram,
    SymmetricPair,
    enumerate_syd,
)

P = SignedYoungDiagram.parse


def O(text):
    return OrbitLabel.parse(text)


def test_component_group_examples():
    assert component_group(AIII_SL(16, 16), O("6^4+ 4^2-")) == ComponentGroup("Cyclic", 2)
    assert component_group(BDI(4, 3), O("3+ 3- 1+")) == ComponentGroup("Elementary2", 2)
    assert component_group(CI(1), O("1+ 1-")).kind == "Trivial"


def test_component_group_normalizes_trivial():
    assert ComponentGroup("Cyclic", 1) == ComponentGroup("Elementary2", 0)
    assert str(ComponentGroup("Elementary2", 3)) == "(Z/2)^3"
    with pytest.raises(ValueError):
        ComponentGroup("Cyclic", 0)


def test_component_group_rejects_foreign_orbit():
    with pytest.raises(ValueError):
        component_group(BDI(2, 1), O("2+ 1-"))


def test_orbital_count_examples():
    assert orbital_complex_count(BDI(2, 1)) == 3
    assert orbital_complex_count(CI(1)) == 5
    assert orbital_complex_count(AIII_SL(1, 1)) == 5


# frozen from tests/oracles.py (row multisets, own component-group table)
FROZEN_A = [
    ("AIII_SL", 2, 2, 19), ("AIII_SL", 3, 2, 17), ("AIII_PGL", 3, 3, 25), ("AIII_PGL", 4, 4, 65),
    ("BDI", 2, 1, 3), ("BDI", 2, 2, 8), ("BDI", 4, 4, 48), ("BDI", 5, 3, 32),
    ("CI", 1, 1, 5), ("CI", 4, 4, 130), ("CII", 1, 1, 2), ("CII", 2, 2, 6),
    ("DIII", 4, 4, 9), ("DIII", 6, 6, 23),
]


@pytest.mark.parametrize("kind,p,q,A", FROZEN_A)
def test_orbital_count_frozen(kind, p, q, A):
    assert orbital_complex_count(SymmetricPair(kind, p, q)) == A


@given(st.sampled_from(["AIII_SL", "AIII_PGL", "BDI"]), st.integers(0, 4), st.integers(0, 4))
def test_orbital_count_vs_oracle(kind, p, q):
    assert orbital_complex_count(SymmetricPair(kind, p, q)) == oracles.orbital_count(kind, p, q)


@given(st.integers(0, 5))
def test_ci_orbital_count_vs_oracle(n):
    assert orbital_complex_count(CI(n)) == oracles.orbital_count("CI", n, n)


def test_support_examples():
    assert [s.text() for s in support_set(CII(1, 1))] == ["(k=0, mu=2+ 2-)", "(k=1, mu=0)"]
    sl = {(s.m, s.k, s.mu.text()) for s in support_set(AIII_SL(1, 1))}
    assert sl == {(1, 1, "0"), (0, 0, "2+"), (0, 0, "2-")}
    assert [(s.m, s.k, s.mu.text()) for s in support_set(BDI(3, 0))] == [(0, 0, "1+ 1+ 1+")]


def test_descriptor_examples():
    top = next(s for s in support_set(AIII_SL(1, 1)) if s.k == 1)
    fd = fundamental_group_descriptor(top)
    assert fd.braid == (("B", 1),) and fd.abelian == (2,)
    s0 = support_set(CII(1, 1))[0]
    assert fundamental_group_descriptor(s0).text() == "1"


def test_descriptor_bdi_shapes():
    for s in support_set(BDI(5, 4)):
        fd = fundamental_group_descriptor(s)
        if s.mu.diagram.is_empty:
            assert fd.abelian == () and all(f in ("ExtD", "ExtB") for f, _ in fd.braid)
        else:
            assert fd.abelian == (2,) * r_bdi(s.mu.diagram)
            assert all(f == "ExtB" for f, _ in fd.braid)


def test_descriptor_rejects_foreign_support():
    s = support_set(CII(1, 1))[0]
    bogus = SupportLabel(CII(2, 1), s.shape, s.m, s.k, s.mu)
    with pytest.raises(ValueError):
        fundamental_group_descriptor(bogus)


SUPPORT_PAIRS = [BDI(3, 2), BDI(4, 4), BDI(5, 1), CI(3), CII(2, 1), CII(2, 2), DIII(5),
                 AIII_PGL(2, 2), AIII_PGL(3, 2), AIII_SL(3, 3), AIII_SL(4, 2)]


@pytest.mark.parametrize("pair", SUPPORT_PAIRS, ids=str)
def test_support_mu_is_richardson(pair):
    labs = support_set(pair)
    assert len(set(labs)) == len(labs)
    for s in labs:
        if s.mu.diagram.rows:
            assert is_richardson(s.reduced_pair, s.mu, check=False) or pair.kind == "AIII_PGL"
        # joined orbit is a genuine orbit of the pair
        assert s.orbit() in enumerate_syd(pair)


@pytest.mark.parametrize("pair", SUPPORT_PAIRS, ids=str)
def test_richardson_orbits_are_the_bottom_supports(pair):
    bottom = {s.mu for s in support_set(pair) if s.k == 0 and s.m in (0, 1 if pair.kind == "AIII_SL" else 0)}
    rich = set(richardson_orbits(pair))
    if pair.kind == "AIII_SL":
        bottom = {s.mu for s in support_set(pair) if s.k == 0}
    assert rich <= bottom | {OrbitLabel(SignedYoungDiagram())}
    assert rich == {mu for mu in bottom if mu.diagram.rows} or not rich


def test_component_group_invariant_under_pgl_swap():
    pair = AIII_PGL(3, 3)
    for o in enumerate_syd(pair):
        sw = OrbitLabel(o.diagram.swap())
        if sw in enumerate_syd(pair):
            assert component_group(pair, sw) == component_group(pair, o)
    assert component_group(pair, O("2+ 2- 1+ 1-")).order == 2
