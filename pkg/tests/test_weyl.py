from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from charsheaves.suites import check_weyl_pair
from charsheaves.syd import AIII_PGL, AIII_SL, BDI, CI, CII, DIII
from charsheaves.weyl import (
    BruteForceBound,
    ICharacter,
    SignedPermutation,
    all_characters,
    character_orbit_reps,
    character_orbits,
    expected_orbit_count,
    expected_stabilizers,
    hyperoctahedral,
    hyperoctahedral_order,
    i_group,
    invariants,
    restricted_root_datum,
    stabilizer,
)


def test_root_datum_examples():
    b = restricted_root_datum(BDI(3, 2))
    assert b.type_name == "B2"
    assert b.multiplicity((1, 0)) == 1 and b.multiplicity((1, 1)) == 1
    c = restricted_root_datum(CII(2, 1))
    assert c.type_name == "BC1"
    assert (c.multiplicity((2,)), c.multiplicity((1,))) == (3, 4)
    ci = restricted_root_datum(CI(2))
    assert ci.type_name == "C2" and {m for _, m in ci.roots} == {1}


def test_root_datum_multiplicities_scale():
    assert restricted_root_datum(BDI(7, 2)).multiplicity((1, 0)) == 5
    assert restricted_root_datum(CII(5, 2)).multiplicity((1, 0)) == 4 * (5 - 2)


def test_i_group_examples():
    assert i_group(CII(2, 1)).rank == 0
    g = i_group(BDI(5, 3))
    assert (g.rank, g.rank0) == (3, 2)
    assert i_group(CI(4)).rank == i_group(CI(4)).rank0 == 4


def test_iota():
    assert set(i_group(BDI(3, 2)).iota.values) == {1}      # SO(odd)
    assert set(i_group(BDI(3, 3)).iota.values) <= {0}
    assert i_group(AIII_PGL(3, 3)).iota.values == (1,)
    assert i_group(AIII_PGL(2, 2)).iota.values == (0,)
    assert set(i_group(CI(3)).iota.values) <= {0}


def test_orbit_rep_examples():
    assert len(character_orbit_reps(CI(2))) == 3
    assert len(character_orbit_reps(BDI(2, 1))) == 2
    assert character_orbit_reps(CII(2, 1)) == [ICharacter(())]
    assert len(character_orbit_reps(DIII(4))) == 1


@pytest.mark.parametrize("pair", [CI(3), BDI(4, 2), BDI(3, 3), BDI(5, 2), AIII_SL(2, 2), AIII_PGL(2, 2)], ids=str)
def test_orbits_partition_characters(pair):
    orbs = character_orbits(pair)
    allc = set(all_characters(pair))
    assert set().union(*orbs) == allc
    assert sum(len(o) for o in orbs) == len(allc)
    assert len(orbs) == expected_orbit_count(pair)


def test_stabilizer_ci2():
    st_ = stabilizer(CI(2), character_orbit_reps(CI(2))[1])
    assert (len(st_.w_chi), len(st_.w0)) == (4, 2)
    assert st_.to_json() == {"pair": "CI:2", "chi": [1, 0], "stabilizerOrder": 4, "w0Order": 2, "quotient": [2]}


@pytest.mark.parametrize("n,m,orders", [(2, 1, (4, 2)), (3, 1, (16, 8)), (3, 3, (48, 24))])
def test_ci_stabilizers_vs_matrix_oracle(n, m, orders):
    assert oracles.ci_stabilizer_orders(n, m) == orders
    st_ = stabilizer(CI(n), character_orbit_reps(CI(n))[m])
    assert (len(st_.w_chi), len(st_.w0)) == orders


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_ci_stabilizers_vs_oracle_random(nm):
    n, m = nm
    st_ = stabilizer(CI(n), character_orbit_reps(CI(n))[m])
    assert (len(st_.w_chi), len(st_.w0)) == oracles.ci_stabilizer_orders(n, m)


@pytest.mark.parametrize("pair", [BDI(3, 2), BDI(4, 4), BDI(5, 3), CI(3)], ids=str)
def test_trivial_character_fixed_by_everything(pair):
    datum = restricted_root_datum(pair)
    st_ = stabilizer(pair, character_orbit_reps(pair)[0])
    assert len(st_.w_chi) == datum.order


@pytest.mark.parametrize("n", [3, 4, 5])
def test_split_d_index_two(n):
    for m in range(1, n):
        st_ = stabilizer(BDI(n, n), character_orbit_reps(BDI(n, n))[m])
        assert st_.index == 2


@pytest.mark.parametrize("pair", [BDI(4, 3), BDI(5, 5), BDI(6, 2), CI(4)], ids=str)
def test_matches_block_subgroups(pair):
    assert check_weyl_pair(pair, 7) == []


def test_block_subgroups_are_exact():
    pair = BDI(6, 2)
    datum = restricted_root_datum(pair)
    for m, chi in enumerate(character_orbit_reps(pair)):
        w, w0 = expected_stabilizers(pair, m)
        st_ = stabilizer(pair, chi)
        assert st_.w_chi == w and st_.w0 == w0
        assert invariants(w, datum).order == len(w)


small_pairs = st.sampled_from([CI(1), CI(2), CI(3), BDI(2, 1), BDI(3, 2), BDI(2, 2), BDI(3, 3), BDI(5, 2),
                               AIII_SL(2, 2), AIII_PGL(3, 3), CII(3, 2), DIII(5)])


@given(small_pairs, st.data())
def test_any_character_gives_elementary_two_quotient(pair, data):
    chi = data.draw(st.sampled_from(all_characters(pair)))
    st_ = stabilizer(pair, chi)
    assert st_.w0 <= st_.w_chi
    assert st_.normal and st_.elementary_two
    assert 2 ** len(st_.quotient) == st_.index


def test_bound():
    with pytest.raises(BruteForceBound, match="exceeds the brute force bound"):
        stabilizer(CI(8), character_orbit_reps(CI(8))[0])
    with pytest.raises(BruteForceBound):
        stabilizer(CI(3), character_orbit_reps(CI(3))[0], bound=2)


def test_wrong_character_rank():
    with pytest.raises(ValueError):
        stabilizer(CI(2), ICharacter((1, 0, 0)))


perm_st = st.integers(1, 4).flatmap(lambda r: st.tuples(
    st.permutations(range(r)), st.lists(st.sampled_from([1, -1]), min_size=r, max_size=r)))


@given(perm_st, perm_st)
def test_signed_permutations_form_a_group(a, b):
    A = SignedPermutation.from_parts(*a)
    B = SignedPermutation.from_parts(*b)
    I = SignedPermutation.identity(A.rank)
    assert A * A.inverse() == I == A.inverse() * A
    assert A.is_even() == (A.signs.count(-1) % 2 == 0)
    if A.rank == B.rank:
        v = tuple(range(1, A.rank + 1))
        # acting is a homomorphism in one of the two orders
        assert (A * B).act(v) in (A.act(B.act(v)), B.act(A.act(v)))


@pytest.mark.parametrize("r", range(5))
def test_hyperoctahedral_orders(r):
    assert len(hyperoctahedral(r)) == hyperoctahedral_order(r)
    assert len(hyperoctahedral(r, even=True)) == hyperoctahedral_order(r, even=True)
    assert len(list(oracles.signed_perm_matrices(r))) == hyperoctahedral_order(r)


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
