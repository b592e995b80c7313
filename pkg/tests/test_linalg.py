import random
from fractions import Fraction

import pytest
from sympy import Matrix, Rational

from algebra import linalg
from algebra.errors import SingularGramError
from algebra.scalar_field import CycScalar, zeta


def rational_matrix(rows):
    return [[CycScalar.from_rational(1, x) for x in row] for row in rows]


def as_sympy(rows):
    return Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in rows])


@pytest.mark.parametrize('seed', range(5))
def test_determinant_and_rank_match_sympy(seed):
    rng = random.Random(seed)
    size = rng.randint(2, 5)
    rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(size)] for _ in range(size)]
    if seed % 2:
        rows[-1] = [a + b for a, b in zip(rows[0], rows[1])]
    expected = as_sympy(rows)
    determinant = linalg.determinant(rational_matrix(rows), 1)
    assert determinant.to_fraction() == Fraction(int(expected.det().p), int(expected.det().q))
    assert linalg.rank(rational_matrix(rows), 1) == expected.rank()


def test_inverse_over_cyclotomic_field():
    z = zeta(3, 2)
    one, zero = CycScalar.one(3), CycScalar.zero(3)
    m = [[one, z], [z * z, one + z]]
    product = linalg.mat_mul(m, linalg.inverse(m, 3))
    assert product == linalg.identity(2, 3)
    with pytest.raises(SingularGramError):
        linalg.inverse([[one, z], [one, z]], 3)
    assert linalg.rank([[one, z], [one, z]], 3) == 1
    assert linalg.determinant([[one, z], [zero, z]], 3) == z


def test_scalar_value_and_kron():
    two = rational_matrix([[2, 0], [0, 2]])
    assert linalg.scalar_value(two) == 2
    assert linalg.scalar_value(rational_matrix([[2, 1], [0, 2]])) is None
    block = linalg.kron(two, rational_matrix([[1, 3]]))
    assert block == rational_matrix([[2, 6, 0, 0], [0, 0, 2, 6]])
    assert linalg.trace(two, 1) == 4
