from fractions import Fraction

import pytest

from algebra import isomorphism
from algebra.combinatorics import Composition
from algebra.errors import ModuleAxiomError, ParameterMismatch
from algebra.hecke_algebra import HeckeAlgebra, HParams
from algebra.representations import hecke_module, local_images, tensor_module
from algebra.scalar_field import CycScalar
from algebra.yokonuma_algebra import YParams


def scalar_matrix(*rows):
    return [[CycScalar.from_rational(1, x) for x in row] for row in rows]


@pytest.mark.parametrize('label', [
    ((2,), ()),
    ((1, 1), ()),
    ((), (2,)),
    ((1,), (1,)),
])
def test_builtin_modules_of_h2(label):
    algebra = HeckeAlgebra(HParams.single(2, 2, (0, 2)))
    module = tensor_module(algebra, [label])
    assert module.check_module_axioms()


def test_two_dimensional_module_matrices():
    dimension, xs, ss = local_images(((1,), (1,)), (Fraction(0), Fraction(2)), 1)
    assert dimension == 2
    assert xs[0] == scalar_matrix((0, 0), (0, 2))
    assert xs[1] == scalar_matrix((2, 0), (0, 0))
    assert ss[1] == scalar_matrix((Fraction(1, 2), Fraction(3, 4)), (1, Fraction(-1, 2)))


def test_builtin_modules_need_distinct_parameters():
    with pytest.raises(ParameterMismatch):
        local_images(((1,), (1,)), (Fraction(1), Fraction(1)), 1)
    with pytest.raises(ParameterMismatch):
        local_images(((1,), (1,)), (Fraction(0), Fraction(1)), 1)
    with pytest.raises(ParameterMismatch):
        local_images(((1,), (1,)), (Fraction(3), Fraction(2)), 1)
    with pytest.raises(ParameterMismatch):
        local_images(((3,), ()), (Fraction(0), Fraction(1)), 1)


def test_tensor_product_over_blocks():
    algebra = HeckeAlgebra(HParams((2, 1), 2, (0, 2)))
    module = tensor_module(algebra, [((1,), (1,)), ((), (1,))])
    assert module.dimension == 2
    assert module.check_module_axioms()
    with pytest.raises(ParameterMismatch):
        tensor_module(algebra, [((1,), (1,))])


def test_wrong_images_are_caught():
    algebra = HeckeAlgebra(HParams.single(1, 2, (0, 3)))
    module = hecke_module(algebra, [scalar_matrix((1,))], {}, label='x -> 1')
    with pytest.raises(ModuleAxiomError):
        module.check_module_axioms()
    assert hecke_module(algebra, [scalar_matrix((3,))], {}).check_module_axioms()


def test_transported_module():
    params = YParams(2, 2, 1, (0,))
    iso = isomorphism.context(params)
    mu = Composition((1, 1))
    local = tensor_module(iso.hecke[mu], [((1,),), ((1,),)])
    module = iso.transport_module(local, mu)
    assert module.dimension == 2
    assert module.check_module_axioms()
    one = module.element_matrix(iso.algebra.one())
    assert one == [[CycScalar.one(2), CycScalar.zero(2)], [CycScalar.zero(2), CycScalar.one(2)]]
    # the other blocks act by zero
    assert module.element_matrix(iso.algebra.E((1, 1))) == [[CycScalar.zero(2)] * 2] * 2
