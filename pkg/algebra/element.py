"""
Sparse linear combinations of normal monomials.

Every algebra in the package hands out elements of this shape: a dict from
monomial to nonzero CycScalar plus a back reference to the algebra, which
owns multiplication and validates operands.
"""
from fractions import Fraction

from .errors import ParameterMismatch
from .scalar_field import CycScalar


class Element:
    __hash__ = None

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def _same_algebra(self, other):
        if (type(other) is not type(self)
                or other.algebra.params != self.algebra.params):
            raise ParameterMismatch(
                f"cannot combine elements of {self.algebra.params} and "
                f"{getattr(other, 'algebra', None) and other.algebra.params}"
            )

    def _new(self, terms):
        return type(self)(self.algebra, terms)

    def __add__(self, other):
        self._same_algebra(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            total = terms.get(m)
            terms[m] = c if total is None else total + c
        return self._new(terms)

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scaled(other)
        self._same_algebra(other)
        return self.algebra.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, coeff):
        coeff = self.algebra.scalar(coeff)
        return self._new({m: c * coeff for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Element):
            return NotImplemented
        return (type(other) is type(self)
                and self.algebra.params == other.algebra.params
                and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, monomial):
        return self.terms.get(monomial, CycScalar.zero(self.algebra.params.field))

    def items(self):
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def __repr__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f"({c})*{self.algebra.monomial_name(m)}" for m, c in self.items())
