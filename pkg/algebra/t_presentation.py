"""
The t-monomial presentation t^k x^a f_w of the Yokonuma-Hecke algebra.

Besides the change of basis to and from the idempotent basis, TPresentation
multiplies directly from the defining relations

    t_j^r = 1,  f_i t_j = t_{s_i(j)} f_i,  f_i x_{i+1} = x_i f_i + e_i,
    f_i x_j = x_j f_i (j != i, i+1),  e_i = (1/r) sum_s t_i^s t_{i+1}^-s,

without idempotents, and serves as an independent check of the E-basis
multiplier.
"""
import itertools
import logging
from fractions import Fraction
from typing import NamedTuple

from .combinatorics import Permutation, all_characters, all_permutations
from .element import Element
from .errors import IndexOutOfRange, ParameterMismatch, VariantError
from .rewriting import accumulate, relation_coefficients
from .scalar_field import CycScalar, zeta_power

logger = logging.getLogger(__name__)


class TMonomial(NamedTuple):
    t: tuple
    xexp: tuple
    w: Permutation


class TElement(Element):
    pass


def idempotent_coefficients(r, chi):
    """{k: coefficient of t^k in E_chi} for E_chi = prod_i (1/r) sum_s chi(t_i)^s t_i^-s."""
    weight = Fraction(1, r ** len(chi))
    out = {}
    for k in itertools.product(range(r), repeat=len(chi)):
        c = CycScalar.from_rational(r, weight)
        for a, k_i in zip(chi, k):
            c = c * zeta_power(r, -(a - 1) * k_i)
        out[k] = c
    return out


def character_value(r, chi, k):
    """chi(t^k) = prod_i zeta_{a_i}^{k_i}."""
    return zeta_power(r, sum((a - 1) * k_i for a, k_i in zip(chi, k)))


class TPresentation:

    def __init__(self, params):
        self.params = params
        self.r = params.r
        self.n = params.n
        self.d = params.d
        self.identity = Permutation.identity(self.n)
        self.zero_t = (0,) * self.n
        self.zero_exponents = (0,) * self.n
        self.one_scalar = CycScalar.one(self.r)
        self._simple = {i: Permutation.transposition(self.n, i) for i in range(1, self.n)}
        self._f_times_x = {}
        self._nf_cache = {}
        if self.d is not None:
            self.relation = tuple(
                CycScalar.from_rational(self.r, c) for c in relation_coefficients(self.d, params.v)
            )

    def scalar(self, value):
        if isinstance(value, CycScalar):
            return value
        return CycScalar.from_rational(self.r, value)

    def monomial_name(self, m):
        t, xexp, w = m
        parts = [f"t{i}^{k}" if k > 1 else f"t{i}" for i, k in enumerate(t, 1) if k]
        parts.extend(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(xexp, 1) if e)
        if not w.is_identity():
            parts.append(f"f{list(w)}")
        return '*'.join(parts) or '1'

    def validate_monomial(self, t, xexp, w):
        """t exponents are taken mod r."""
        t = tuple(int(k) % self.r for k in t)
        w = Permutation.checked(w)
        xexp = tuple(int(e) for e in xexp)
        if len(t) != self.n or len(w) != self.n or len(xexp) != self.n:
            raise ParameterMismatch(f"monomial does not live on {self.n} strands")
        if any(e < 0 for e in xexp):
            raise IndexOutOfRange(f"negative exponent in {list(xexp)}")
        return TMonomial(t, xexp, w)

    def element(self, terms=None):
        out = {}
        for m, c in (terms or {}).items():
            accumulate(out, self.validate_monomial(*m), self.scalar(c))
        return self.normal_form(TElement(self, out))

    def one(self):
        return TElement(self, {TMonomial(self.zero_t, self.zero_exponents, self.identity): self.one_scalar})

    def generator_t(self, i):
        t = tuple(1 if j == i else 0 for j in range(1, self.n + 1))
        return TElement(self, {TMonomial(t, self.zero_exponents, self.identity): self.one_scalar})

    def generator_f(self, i):
        return TElement(self, {TMonomial(self.zero_t, self.zero_exponents, self._simple[i]): self.one_scalar})

    def generator_x(self, i):
        xexp = tuple(1 if j == i else 0 for j in range(1, self.n + 1))
        return TElement(self, self._reduce({(self.zero_t, xexp, self.identity): self.one_scalar}))

    # -- relations --------------------------------------------------------

    def _e_terms(self, i, coeff, xexp):
        """coeff * e_i x^xexp as t-monomials."""
        share = coeff * Fraction(1, self.r)
        out = {}
        for s in range(self.r):
            t = [0] * self.n
            t[i - 1] = s
            t[i] = (-s) % self.r
            out[(tuple(t), xexp, self.identity)] = share
        return out

    def f_times_x(self, i, xexp):
        """f_i x^xexp, peeling one x at a time off the lowest occupied strand."""
        key = (i, xexp)
        found = self._f_times_x.get(key)
        if found is not None:
            return found
        s = self._simple[i]
        m = next((j for j, e in enumerate(xexp, 1) if e), None)
        if m is None:
            found = {(self.zero_t, xexp, s): self.one_scalar}
        else:
            rest = xexp[:m - 1] + (xexp[m - 1] - 1,) + xexp[m:]
            target = s(m) - 1
            found = {}
            for (t, y, p), c in self.f_times_x(i, rest).items():
                accumulate(found, (t, y[:target] + (y[target] + 1,) + y[target + 1:], p), c)
            if m in (i, i + 1):
                sign = 1 if m == i + 1 else -1
                for term, c in self._e_terms(i, self.one_scalar * sign, rest).items():
                    accumulate(found, term, c)
        self._f_times_x[key] = found
        return found

    def _add_t(self, a, b):
        return tuple((p + q) % self.r for p, q in zip(a, b))

    def _add_x(self, a, b):
        return tuple(p + q for p, q in zip(a, b))

    def affine_product(self, left, right):
        t1, alpha, w = left
        t2, beta, v = right
        # f_w t^t2 = t^{w.t2} f_w
        prefix = self._add_t(t1, w.permute(t2))
        terms = {(self.zero_t, beta, self.identity): self.one_scalar}
        for i in reversed(w.reduced_word()):
            s = self._simple[i]
            out = {}
            for (t, y, u), c in terms.items():
                moved = s.permute(t)
                for (t3, y3, p), c3 in self.f_times_x(i, y).items():
                    accumulate(out, (self._add_t(moved, t3), y3, p.compose(u)), c * c3)
            terms = out
        result = {}
        for (t, y, u), c in terms.items():
            accumulate(result, (self._add_t(prefix, t), self._add_x(alpha, y), u.compose(v)), c)
        return result

    # -- cyclotomic quotient ----------------------------------------------

    def _reduce(self, terms):
        if self.d is None:
            return terms
        out = {}
        for (t, x, u), c in terms.items():
            if max(x) < self.d:
                accumulate(out, (t, x, u), c)
                continue
            for (t2, y, z), c2 in self._nf(t, x).items():
                accumulate(out, (t2, y, z.compose(u)), c * c2)
        return out

    def _nf(self, t, x):
        key = (t, x)
        found = self._nf_cache.get(key)
        if found is not None:
            return found
        d = self.d
        k = next(i for i, e in enumerate(x, 1) if e >= d)
        found = {}
        if k == 1:
            for m, c in enumerate(self.relation):
                if c:
                    y = (x[0] - d + m,) + x[1:]
                    for term, c2 in self._reduce({(t, y, self.identity): self.one_scalar}).items():
                        accumulate(found, term, c * c2)
        else:
            # t^t x^x = f (t^{st} x^{sx}) f minus the lower terms of f t^{st} x^{sx} f
            s = self._simple[k - 1]
            s_t, s_x = s.permute(t), s.permute(x)
            for (t2, y, z), c in self._nf(s_t, s_x).items():
                product = self.affine_product((self.zero_t, self.zero_exponents, s), (t2, y, z))
                product = {(a, b, u.compose(s)): c2 for (a, b, u), c2 in product.items()}
                for term, c3 in self._reduce(product).items():
                    accumulate(found, term, c * c3)
            lower = self.affine_product((self.zero_t, self.zero_exponents, s), (s_t, s_x, s))
            lower.pop((t, x, self.identity))
            for term, c in self._reduce(lower).items():
                accumulate(found, term, -c)
        self._nf_cache[key] = found
        return found

    def normal_form(self, element):
        return TElement(self, {TMonomial._make(m): c for m, c in self._reduce(element.terms).items()})

    def multiply(self, a, b):
        if a.algebra.params != self.params or b.algebra.params != self.params:
            raise ParameterMismatch("operands belong to a different algebra")
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                for key, c in self._reduce(self.affine_product(m1, m2)).items():
                    accumulate(out, key, c1 * c2 * c)
        return TElement(self, {TMonomial._make(m): c for m, c in out.items()})

    # -- change of basis --------------------------------------------------

    def from_idempotent_basis(self, element):
        """Expand every E_chi of a YElement into t-monomials."""
        if element.algebra.params != self.params:
            raise ParameterMismatch("element belongs to a different algebra")
        out = {}
        for (chi, xexp, w), c in element.terms.items():
            for k, ck in idempotent_coefficients(self.r, chi).items():
                accumulate(out, (k, xexp, w), c * ck)
        return TElement(self, {TMonomial._make(m): c for m, c in out.items()})

    def to_idempotent_basis(self, element, algebra):
        """t^k = sum_chi chi(t^k) E_chi, then the normal form in `algebra`."""
        if element.algebra.params != self.params or algebra.params != self.params:
            raise ParameterMismatch("element belongs to a different algebra")
        out = {}
        characters = all_characters(self.r, self.n)
        for (k, xexp, w), c in element.terms.items():
            for chi in characters:
                accumulate(out, (chi, xexp, w), c * character_value(self.r, chi, k))
        return algebra.element(out)

    # -- forms and bases --------------------------------------------------

    def form_tau_hat(self, element):
        """Sum of the coefficients on t^0 x^(d-1,...,d-1) f_1."""
        if self.d is None:
            raise VariantError("symmetrizing forms need the cyclotomic quotient")
        top = (self.d - 1,) * self.n
        return sum(
            (c for (t, x, w), c in element.terms.items()
             if x == top and w.is_identity() and not any(t)),
            CycScalar.zero(self.r),
        )

    def enumerate_basis(self):
        if self.d is None:
            raise VariantError("only the cyclotomic quotient has a finite basis")
        return [TMonomial(t, x, w)
                for t in itertools.product(range(self.r), repeat=self.n)
                for x in itertools.product(range(self.d), repeat=self.n)
                for w in all_permutations(self.n)]
