import itertools
import random

import pytest

from algebra import isomorphism
from algebra.combinatorics import Composition, characters_of
from algebra.errors import ParameterMismatch
from algebra.hecke_algebra import MatrixOverH
from algebra.yokonuma_algebra import YParams


def random_element(algebra, rng, size=6):
    basis = algebra.enumerate_basis()
    total = algebra.zero()
    for m in rng.sample(basis, size):
        total = total + algebra.basis_element(m).scaled(rng.randint(-3, 3))
    return total


def test_dimension_identity():
    for r, n, d in itertools.product(range(1, 4), range(1, 5), range(1, 3)):
        assert isomorphism.dimension_identity(r, n, d)


@pytest.mark.parametrize('params', [
    YParams(2, 2, 1, (0,)),
    YParams(3, 2, 1, (0,)),
    YParams(2, 2),
])
def test_homomorphism_and_bijection(params):
    assert isomorphism.verify_homomorphism(params).passed
    assert isomorphism.verify_bijection(params).passed


@pytest.mark.slow
@pytest.mark.parametrize('params', [
    YParams(2, 2, 2, (0, 1)),
    YParams(2, 3, 1, (0,)),
])
def test_homomorphism_on_larger_algebras(params):
    assert isomorphism.verify_homomorphism(params).passed
    assert isomorphism.verify_bijection(params).passed


def test_coset_commutation_and_conjugation():
    params = YParams(2, 2, 2, (0, 1))
    report = isomorphism.verify_coset_commutation(params)
    assert report.passed
    assert report.checked == 4 * 4
    assert isomorphism.verify_conjugation(YParams(2, 2, 1, (0,))).passed


def test_phi_splitting_strategies_agree():
    iso = isomorphism.context(YParams(2, 2, 2, (0, 1)))
    rng = random.Random(11)
    for _ in range(5):
        element = random_element(iso.algebra, rng)
        images = iso.phi_full(element)
        assert images == iso.phi_full_by_filtering(element)
        assert iso.psi_full(images) == element


def test_phi_of_the_unit_is_the_identity():
    iso = isomorphism.context(YParams(3, 2, 1, (0,)))
    images = iso.phi_full(iso.algebra.one())
    assert len(images) == 6
    for mu, matrix in images.items():
        assert matrix == MatrixOverH.identity(iso.hecke[mu])
        assert matrix.size == len(characters_of(mu))


def test_matrix_units_come_back():
    iso = isomorphism.context(YParams(2, 2, 1, (0,)))
    mu = Composition((1, 1))
    hecke = iso.hecke[mu]
    for row, col in itertools.product(characters_of(mu), repeat=2):
        unit = MatrixOverH.unit(hecke, row, col)
        back = iso.psi_mu(unit)
        assert iso.phi_mu(back, mu) == unit
        assert back * back == (back if row == col else iso.algebra.zero())


def test_corner_embedding_is_multiplicative():
    iso = isomorphism.context(YParams(2, 2, 2, (0, 1)))
    for mu in (Composition((1, 1)), Composition((2, 0))):
        hecke = iso.hecke[mu]
        elements = [hecke.basis_element(m) for m in hecke.enumerate_basis()]
        for a, b in itertools.product(elements, repeat=2):
            assert iso.corner_embedding(a * b, mu) == \
                iso.corner_embedding(a, mu) * iso.corner_embedding(b, mu)


def test_block_membership_is_checked():
    iso = isomorphism.context(YParams(2, 2, 1, (0,)))
    with pytest.raises(ParameterMismatch):
        iso.phi_mu(iso.algebra.E((1, 1)), (1, 1))
    with pytest.raises(ParameterMismatch):
        iso.hecke_algebra((3, 0))
    with pytest.raises(ParameterMismatch):
        iso.corner_embedding(iso.hecke[Composition((2, 0))].one(), (1, 1))


def test_sampling_is_seeded():
    assert isomorphism.sample_pairs(10, 5, 7) == isomorphism.sample_pairs(10, 5, 7)
    assert len(isomorphism.all_pairs(4)) == 16
    pairs = isomorphism.sample_pairs(8, 20, 1)
    report = isomorphism.verify_homomorphism(YParams(2, 2, 1, (0,)), pairs)
    assert report.passed and report.checked == 20


def test_block_images_list_every_composition():
    iso = isomorphism.context(YParams(2, 2, 1, (0,)))
    images = iso.block_images(iso.algebra.f(1))
    assert [image.mu for image in images] == iso.compositions
    assert all(not image.matrix.is_zero() for image in images)


@pytest.mark.slow
def test_homomorphism_exhaustive_at_rank_three():
    params = YParams(3, 2, 2, (0, 1))
    report = isomorphism.verify_homomorphism(params)
    assert report.passed
    assert report.checked == 72 * 72
    assert isomorphism.verify_bijection(params).passed


@pytest.mark.slow
def test_homomorphism_sampled_on_three_strands():
    params = YParams(2, 3, 2, (0, 1))
    size = len(isomorphism.basis_of(params))
    assert size == 384
    report = isomorphism.verify_homomorphism(params, isomorphism.sample_pairs(size, 10000, 2024))
    assert report.passed
    assert report.checked == 10000


@pytest.mark.parametrize('params', [
    YParams(3, 2, 2, (0, 1)),
    YParams(2, 3, 1, (0,)),
])
def test_coset_commutation_on_more_algebras(params):
    assert isomorphism.verify_coset_commutation(params).passed
