import itertools

import pytest

from algebra.combinatorics import Character, Permutation
from algebra.errors import NotInYoungSubgroup, ParameterMismatch, VariantError
from algebra.hecke_algebra import HeckeAlgebra, HParams, MatrixOverH, mat_multiply, mat_trace_form


def test_dimensions():
    assert HParams((2, 1), 1, (0,)).dimension == 2
    assert HParams.single(3, 2, (0, 1)).dimension == 8 * 6
    algebra = HeckeAlgebra(HParams((1, 2), 2, (0, 1)))
    assert len(algebra.enumerate_basis()) == algebra.dimension == 16
    with pytest.raises(VariantError):
        HParams.single(2).dimension


def test_degenerate_relations():
    algebra = HeckeAlgebra(HParams.single(2))
    s, x1, x2, one = algebra.s(1), algebra.x(1), algebra.x(2), algebra.one()
    assert s * s == one
    assert s * x2 - x1 * s == one
    assert x1 * x2 == x2 * x1
    assert s * (x1 + x2) == (x1 + x2) * s


def test_cyclotomic_relation_on_every_block():
    algebra = HeckeAlgebra(HParams((1, 1), 2, (0, 1)))
    one = algebra.one()
    for i in (1, 2):
        x = algebra.x(i)
        assert x * (x - one) == 0
    single = HeckeAlgebra(HParams.single(2, 2, (0, 1)))
    x2 = single.x(2)
    assert x2 * (x2 - single.one()) != 0


def test_young_subgroup_is_enforced():
    algebra = HeckeAlgebra(HParams((1, 2)))
    with pytest.raises(NotInYoungSubgroup):
        algebra.s(1)
    assert algebra.s(2) * algebra.s(2) == algebra.one()
    with pytest.raises(NotInYoungSubgroup):
        algebra.monomial((0, 0, 0), (2, 1, 3))


def test_associativity():
    algebra = HeckeAlgebra(HParams((1, 2), 2, (0, 1)))
    elements = [algebra.basis_element(m) for m in algebra.enumerate_basis()]
    for a, b, c in itertools.product(elements[:8], elements, elements[8:]):
        assert (a * b) * c == a * (b * c)


def test_block_factors():
    algebra = HeckeAlgebra(HParams((1, 2), 2, (0, 1)))
    for m in algebra.enumerate_basis():
        factors = algebra.block_factors(m)
        assert len(factors) == 2
        assert algebra.from_block_factors(factors) == m
    m = algebra.enumerate_basis()[-1]
    assert algebra.block_factors(m) == [((1,), (1,)), ((1, 1), (2, 1))]


def test_forms():
    single = HeckeAlgebra(HParams.single(1, 2, (0, 3)))
    x = single.x(1)
    assert single.form_tau_n(x) == 1
    assert single.form_tau_n(x * x) == 3
    assert single.form_tau_n(single.one()) == 0
    blocks = HeckeAlgebra(HParams((1, 1), 2, (0, 3)))
    assert blocks.form_tau_mu(blocks.x(1) * blocks.x(2)) == 1
    assert blocks.form_tau_mu(blocks.x(1)) == 0
    with pytest.raises(ParameterMismatch):
        blocks.form_tau_n(blocks.one())
    with pytest.raises(VariantError):
        HeckeAlgebra(HParams.single(1)).form_tau_n(HeckeAlgebra(HParams.single(1)).one())


def test_matrices_over_h():
    algebra = HeckeAlgebra(HParams((1, 1), 1, (0,), field=2))
    a, b = Character((1, 2)), Character((2, 1))
    identity = MatrixOverH.identity(algebra)
    unit_ab = MatrixOverH.unit(algebra, a, b)
    assert identity.size == 2
    assert identity * unit_ab == unit_ab
    assert unit_ab * MatrixOverH.unit(algebra, b, a) == MatrixOverH.unit(algebra, a, a)
    assert (unit_ab * unit_ab).is_zero()
    assert identity.trace_form() == 2
    assert (identity - identity).is_zero()
    with pytest.raises(ParameterMismatch):
        MatrixOverH.unit(algebra, Character((1, 1)), a)


def test_elements_from_different_blocks_do_not_mix():
    left = HeckeAlgebra(HParams((1, 1), 1, (0,)))
    right = HeckeAlgebra(HParams((2, 0), 1, (0,)))
    with pytest.raises(ParameterMismatch):
        left.one() * right.one()
    assert right.w_bar(Permutation((2, 1))) == right.s(1)


def test_matrix_helpers():
    algebra = HeckeAlgebra(HParams((1, 1), 2, (0, 3), field=2))
    a, b = Character((1, 2)), Character((2, 1))
    x1x2 = algebra.x(1) * algebra.x(2)
    unit = MatrixOverH.unit(algebra, a, b, x1x2)
    back = MatrixOverH.unit(algebra, b, a)
    assert mat_multiply(unit, back) == MatrixOverH.unit(algebra, a, a, x1x2)
    assert mat_trace_form(mat_multiply(unit, back)) == 1
    assert mat_trace_form(mat_multiply(back, unit)) == 1
    assert mat_trace_form(unit) == 0
