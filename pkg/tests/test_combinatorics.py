import functools

import pytest

from algebra.combinatorics import (
    Character, Composition, Permutation, act, all_characters, all_permutations,
    characters_of, chi0, comp_of, cosets, enumerate_compositions, enumerate_multipartitions,
    enumerate_partitions, enumerate_r_tuples_of_d_partitions, in_young_subgroup, m_mu,
    pi_chi, young_subgroup,
)
from algebra.errors import IndexOutOfRange, ParameterMismatch


def test_composition_of_permutations():
    s1 = Permutation.transposition(3, 1)
    s2 = Permutation.transposition(3, 2)
    assert s1 == (2, 1, 3)
    assert s1.compose(s2) == (2, 3, 1)
    assert s1.compose(s2)(1) == s1(s2(1))
    w = Permutation((3, 1, 2))
    assert w.compose(w.inverse()).is_identity()


def test_reduced_words():
    for w in all_permutations(4):
        word = w.reduced_word()
        assert len(word) == w.length()
        product = functools.reduce(
            lambda u, i: u.compose(Permutation.transposition(4, i)), word, Permutation.identity(4))
        assert product == w
    assert Permutation((3, 2, 1)).length() == 3


def test_action_on_characters():
    chi = Character((1, 2, 2))
    w, v = Permutation((2, 3, 1)), Permutation((2, 1, 3))
    assert act(w, act(v, chi)) == act(w.compose(v), chi)
    # w(chi)_i = chi_{w^-1(i)}
    assert act(w, chi) == (2, 1, 2)
    with pytest.raises(ParameterMismatch):
        act(Permutation.identity(2), chi)


def test_pi_chi_is_the_increasing_coset_representative():
    for chi in all_characters(3, 3):
        mu = comp_of(chi, 3)
        pi = pi_chi(chi, 3)
        assert act(pi, chi0(mu)) == chi
        for block in mu.blocks():
            images = [pi(i) for i in block]
            assert images == sorted(images)


def test_compositions_and_characters():
    assert enumerate_compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(enumerate_compositions(3, 2)) == 6
    assert m_mu((2, 1)) == 3
    assert characters_of((2, 1)) == ((1, 1, 2), (1, 2, 1), (2, 1, 1))
    assert len(cosets((2, 1))) == 3
    assert chi0((1, 0, 2)) == (1, 3, 3)
    assert comp_of((3, 1, 3), 3) == (1, 0, 2)


def test_young_subgroup():
    mu = Composition((2, 1))
    assert young_subgroup(mu) == ((1, 2, 3), (2, 1, 3))
    assert in_young_subgroup(Permutation((1, 3, 2)), (1, 2))
    assert not in_young_subgroup(Permutation((1, 3, 2)), (2, 1))
    assert Composition((0, 2, 1)).block_starts() == (1, 3)
    assert Composition((0, 2, 1)).blocks() == ((), (1, 2), (3,))


def test_partitions_and_labels():
    assert enumerate_partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert enumerate_partitions(0) == ((),)
    assert len(enumerate_multipartitions(2, 2)) == 5
    # r = 2, d = 1, n = 2: labels for mu = (2,0), (1,1), (0,2)
    assert len(enumerate_r_tuples_of_d_partitions(2, 1, 2)) == 5


def test_validation():
    with pytest.raises(IndexOutOfRange):
        Character.checked((0, 1), 2)
    with pytest.raises(IndexOutOfRange):
        Permutation.checked((1, 1))
    with pytest.raises(IndexOutOfRange):
        Permutation.transposition(3, 3)


@pytest.mark.parametrize('r, n', [(2, 3), (3, 3), (2, 4)])
def test_pi_chi_has_minimal_length(r, n):
    group = all_permutations(n)
    for chi in all_characters(r, n):
        start = chi0(comp_of(chi, r))
        lengths = [w.length() for w in group if act(w, start) == chi]
        assert pi_chi(chi, r).length() == min(lengths)
        assert lengths.count(min(lengths)) == 1


def test_block_sizes_count_all_characters():
    for r in range(1, 4):
        for n in range(1, 5):
            assert sum(m_mu(mu) for mu in enumerate_compositions(r, n)) == r ** n


@pytest.mark.parametrize('r, n', [(2, 3), (3, 3), (3, 4)])
def test_stabilizer_of_chi0_is_the_young_subgroup(r, n):
    group = all_permutations(n)
    for mu in enumerate_compositions(r, n):
        start = chi0(mu)
        stabilizer = {w for w in group if act(w, start) == start}
        assert stabilizer == set(young_subgroup(mu))


@pytest.mark.parametrize('r, n', [(2, 3), (3, 3), (3, 4)])
def test_one_coset_representative_per_character(r, n):
    for mu in enumerate_compositions(r, n):
        reached = [act(w, chi0(mu)) for w in cosets(mu)]
        assert len(reached) == len(set(reached)) == m_mu(mu)
        assert sorted(reached) == sorted(characters_of(mu))
