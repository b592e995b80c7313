"""
The degenerate affine Yokonuma-Hecke algebra and its cyclotomic quotient,
in the idempotent basis E_chi x^beta f_w.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .combinatorics import (
    Character, Composition, Permutation, act, all_characters, all_permutations, comp_of,
)
from .element import Element
from .errors import IndexOutOfRange, ParameterMismatch, VariantError
from .rewriting import RewritingEngine, accumulate
from .scalar_field import CycScalar, zeta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class YParams:
    r: int
    n: int
    d: Optional[int] = None
    v: tuple = ()

    def __post_init__(self):
        if self.r < 1 or self.n < 1:
            raise ParameterMismatch(f"need r >= 1 and n >= 1, got r={self.r}, n={self.n}")
        object.__setattr__(self, 'v', tuple(Fraction(p) for p in self.v))
        if self.d is None:
            if self.v:
                raise ParameterMismatch("the affine algebra takes no cyclotomic parameters")
        elif self.d < 1 or len(self.v) != self.d:
            raise ParameterMismatch(f"level d={self.d} needs exactly d parameters, got {len(self.v)}")

    @property
    def field(self):
        return self.r

    @property
    def cyclotomic(self):
        return self.d is not None

    @property
    def dimension(self):
        if self.d is None:
            raise VariantError("the affine algebra is infinite-dimensional")
        return (self.r * self.d) ** self.n * math.factorial(self.n)

    def to_json(self):
        return {
            'r': self.r,
            'n': self.n,
            'd': self.d,
            'v': [str(p) for p in self.v],
        }

    def __str__(self):
        if self.d is None:
            return f"affine Y_{{{self.r},{self.n}}}"
        return f"Y^{self.d}_{{{self.r},{self.n}}}(v={','.join(str(p) for p in self.v)})"


class YMonomial(NamedTuple):
    chi: Character
    xexp: tuple
    w: Permutation


class YElement(Element):
    pass


class YokonumaAlgebra:

    def __init__(self, params):
        self.params = params
        self.r = params.r
        self.n = params.n
        self.d = params.d
        self.engine = RewritingEngine(self.n, self.r, params.d, params.v, block_starts=(1,))
        self.identity = Permutation.identity(self.n)
        self.zero_exponents = (0,) * self.n

    @property
    def cyclotomic(self):
        return self.params.cyclotomic

    def _require_cyclotomic(self, operation):
        if not self.cyclotomic:
            raise VariantError(f"{operation} needs the cyclotomic quotient")

    def scalar(self, value):
        if isinstance(value, CycScalar):
            if value.r != self.r and not value.is_rational():
                raise ParameterMismatch(f"scalar from Q(zeta_{value.r}) in {self.params}")
            return value if value.r == self.r else CycScalar.from_rational(self.r, value.coeffs[0])
        return CycScalar.from_rational(self.r, value)

    def monomial_name(self, m):
        chi, xexp, w = m
        parts = [f"E{list(chi)}"]
        parts.extend(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(xexp, 1) if e)
        if not w.is_identity():
            parts.append(f"f{list(w)}")
        return '*'.join(parts)

    # -- construction -----------------------------------------------------

    def element(self, terms=None):
        """An element from {(chi, xexp, w): coeff}, checked and brought to normal form."""
        out = {}
        for m, c in (terms or {}).items():
            accumulate(out, self.validate_monomial(*m), self.scalar(c))
        return self.normal_form(YElement(self, out))

    def zero(self):
        return YElement(self)

    def validate_monomial(self, chi, xexp, w):
        chi = Character.checked(chi, self.r)
        w = Permutation.checked(w)
        xexp = tuple(int(e) for e in xexp)
        if len(chi) != self.n or len(w) != self.n or len(xexp) != self.n:
            raise ParameterMismatch(f"monomial does not live on {self.n} strands")
        if any(e < 0 for e in xexp):
            raise IndexOutOfRange(f"negative exponent in {list(xexp)}")
        return YMonomial(chi, xexp, w)

    def monomial(self, chi, xexp=None, w=None, coeff=1):
        """coeff * E_chi x^xexp f_w brought to normal form."""
        m = self.validate_monomial(
            chi,
            self.zero_exponents if xexp is None else xexp,
            self.identity if w is None else w,
        )
        if self.cyclotomic and max(m.xexp) >= self.d:
            return self.cyclotomic_reduce(m).scaled(coeff)
        return YElement(self, {m: self.scalar(coeff)})

    def basis_element(self, m):
        return YElement(self, {m: self.engine.one})

    def E(self, chi):
        return self.monomial(chi)

    def one(self):
        return YElement(self, {
            YMonomial(chi, self.zero_exponents, self.identity): self.engine.one
            for chi in all_characters(self.r, self.n)
        })

    def _over_characters(self, coefficient, xexp, w):
        terms = {}
        for chi in all_characters(self.r, self.n):
            c = coefficient(chi)
            if c:
                terms[YMonomial(chi, xexp, w)] = self.scalar(c)
        return YElement(self, terms)

    def x(self, i):
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"x_{i} does not exist on {self.n} strands")
        xexp = tuple(1 if j == i else 0 for j in range(1, self.n + 1))
        return self.normal_form(self._over_characters(lambda chi: 1, xexp, self.identity))

    def f(self, i):
        return self._over_characters(lambda chi: 1, self.zero_exponents,
                                     Permutation.transposition(self.n, i))

    def f_w(self, w):
        return self._over_characters(lambda chi: 1, self.zero_exponents, Permutation.checked(w))

    def t(self, i):
        """t_i = sum_chi chi(t_i) E_chi."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"t_{i} does not exist on {self.n} strands")
        return self._over_characters(lambda chi: zeta(self.r, chi[i - 1]),
                                     self.zero_exponents, self.identity)

    def e(self, i):
        """e_i = sum of E_chi over characters with chi(t_i) = chi(t_{i+1})."""
        if not 1 <= i < self.n:
            raise IndexOutOfRange(f"e_{i} does not exist on {self.n} strands")
        return self._over_characters(lambda chi: int(chi[i - 1] == chi[i]),
                                     self.zero_exponents, self.identity)

    def block_idempotent(self, mu):
        """E_mu: sum of E_chi over characters of composition mu; central."""
        mu = Composition(mu)
        if len(mu) != self.r or mu.size != self.n:
            raise ParameterMismatch(f"{tuple(mu)} is not an {self.r}-composition of {self.n}")
        return self._over_characters(lambda chi: int(comp_of(chi, self.r) == mu),
                                     self.zero_exponents, self.identity)

    def idempotent_E(self, chi):
        """E_chi expanded in the t-monomials."""
        from .t_presentation import TPresentation
        return TPresentation(self.params).from_idempotent_basis(self.E(chi))

    # -- multiplication ---------------------------------------------------

    def multiply(self, a, b):
        if a.algebra.params != self.params or b.algebra.params != self.params:
            raise ParameterMismatch("operands belong to a different algebra")
        terms = self.engine.multiply(a.terms, b.terms)
        return YElement(self, {YMonomial._make(m): c for m, c in terms.items()})

    def cyclotomic_reduce(self, m):
        """Normal form of a monomial whose exponents may reach d."""
        self._require_cyclotomic("cyclotomic_reduce")
        m = self.validate_monomial(*m)
        terms = self.engine.reduce({m: self.engine.one})
        return YElement(self, {YMonomial._make(k): c for k, c in terms.items()})

    def normal_form(self, element):
        """Reduce every term of a possibly unnormalized element."""
        if not self.cyclotomic:
            return YElement(self, element.terms)
        terms = self.engine.reduce(element.terms)
        return YElement(self, {YMonomial._make(k): c for k, c in terms.items()})

    # -- forms ------------------------------------------------------------

    def top_exponents(self):
        self._require_cyclotomic("symmetrizing forms")
        return (self.d - 1,) * self.n

    def form_rho_hat_n(self, element):
        """1 on E_chi x^(d-1,...,d-1), 0 on every other basis monomial."""
        top = self.top_exponents()
        total = CycScalar.zero(self.r)
        for (chi, xexp, w), c in element.terms.items():
            if xexp == top and w.is_identity():
                total = total + c
        return total

    def form_tau_hat(self, element):
        """The normalization taking the value 1 on t^0 x^(d-1,...,d-1)."""
        return self.form_rho_hat_n(element) * Fraction(1, self.r ** self.n)

    # -- bases ------------------------------------------------------------

    def enumerate_basis(self, degree_bound=None):
        """Characters, then exponents, then permutations, each in lexicographic order."""
        if self.cyclotomic:
            exponents = list(itertools.product(range(self.d), repeat=self.n))
        elif degree_bound is None:
            raise VariantError("the affine basis needs a bound on the total x-degree")
        else:
            exponents = [x for x in itertools.product(range(degree_bound + 1), repeat=self.n)
                         if sum(x) <= degree_bound]
        return [YMonomial(chi, x, w)
                for chi in all_characters(self.r, self.n)
                for x in exponents
                for w in all_permutations(self.n)]

    @property
    def dimension(self):
        return self.params.dimension

    # -- checks -----------------------------------------------------------

    def conjugation_failures(self):
        """(w, chi) with f_w E_chi f_{w^-1} != E_{w(chi)}."""
        failures = []
        for w in all_permutations(self.n):
            left, right = self.f_w(w), self.f_w(w.inverse())
            for chi in all_characters(self.r, self.n):
                if left * self.E(chi) * right != self.E(act(w, chi)):
                    failures.append((w, chi))
        logger.debug("conjugation check on %s: %d failures", self.params, len(failures))
        return failures
