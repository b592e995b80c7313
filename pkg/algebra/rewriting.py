"""
PBW rewriting shared by the Yokonuma-Hecke algebra and the Hecke algebras H^mu.

Terms are dicts keyed by (chi, xexp, w) meaning E_chi x^xexp f_w. The Hecke
side uses chi == (), where every e_{a,b} evaluates to 1 and f_w is the
Coxeter element w-bar.

Rewriting strategy for a product of normal monomials:
  - f_w E_psi = E_{w(psi)} f_w, and E_chi E_psi = 0 unless chi == psi;
  - f_u x_j = x_{u(j)} f_u + sum of +-e_{a,b} f_{u'}, tabulated per (u, j) by
    induction on a reduced word, from f_i x_{i+1} = x_i f_i + e_i and
    f_i x_i = x_{i+1} f_i - e_i;
  - E_chi e_{a,b} = E_chi if chi(t_a) == chi(t_b), else 0;
  - f_u f_v = f_{uv};
  - in the cyclotomic quotient, exponents >= d are removed by nf_x below.
"""
import logging
from fractions import Fraction

from sympy import Poly, Rational, prod

from .combinatorics import Permutation, act
from .scalar_field import CycScalar, Z

logger = logging.getLogger(__name__)

PRODUCT_CACHE_SIZE = 500000


def accumulate(terms, key, coeff):
    """terms[key] += coeff, dropping the key when it cancels."""
    total = terms.get(key)
    total = coeff if total is None else total + coeff
    if total:
        terms[key] = total
    else:
        terms.pop(key, None)


def relation_coefficients(d, params):
    """c_0..c_{d-1} with x^d = sum_m c_m x^m modulo (x - v_1)...(x - v_d)."""
    poly = Poly(prod([Z - Rational(v.numerator, v.denominator) for v in params]), Z)
    coeffs = list(reversed(poly.all_coeffs()))  # low to high, leading 1 at index d
    return tuple(-Fraction(int(c.p), int(c.q)) for c in coeffs[:d])


class RewritingEngine:
    """
    Normal forms on n strands.

    d is None for the affine algebra. block_starts lists the strands carrying
    the cyclotomic relation: (1,) for Y^d_{r,n}, the first strand of every
    block for H^mu.
    """

    def __init__(self, n, field, d=None, params=(), block_starts=(1,)):
        self.n = n
        self.field = field
        self.d = d
        self.params = tuple(Fraction(v) for v in params)
        self.block_starts = frozenset(block_starts)
        self.identity = Permutation.identity(n)
        self.zero_exponents = (0,) * n
        self.one = CycScalar.one(field)
        self._simple = {i: Permutation.transposition(n, i) for i in range(1, n)}
        self._crossings = {}
        self._nf_cache = {}
        self._products = {}
        if d is not None:
            self.relation = tuple(
                CycScalar.from_rational(field, c) for c in relation_coefficients(d, self.params)
            )

    @property
    def cyclotomic(self):
        return self.d is not None

    # -- affine rewriting -------------------------------------------------

    def crossing(self, u, j):
        """Corrections (eps, a, b, u') of f_u x_j = x_{u(j)} f_u + sum eps e_{a,b} f_{u'}."""
        key = (u, j)
        found = self._crossings.get(key)
        if found is not None:
            return found
        i = u.left_descent()
        if i is None:
            found = ()
        else:
            s = self._simple[i]
            shorter = s.compose(u)
            m = shorter(j)
            out = []
            if m == i + 1:
                out.append((1, i, i + 1, shorter))
            elif m == i:
                out.append((-1, i, i + 1, shorter))
            for eps, a, b, v in self.crossing(shorter, j):
                out.append((eps, s(a), s(b), s.compose(v)))
            found = tuple(out)
        self._crossings[key] = found
        return found

    @staticmethod
    def e_value(chi, a, b):
        return not chi or chi[a - 1] == chi[b - 1]

    def times_x(self, terms, j):
        """Right multiplication by x_j, affine (no exponent bound)."""
        out = {}
        for (chi, x, u), c in terms.items():
            k = u(j) - 1
            accumulate(out, (chi, x[:k] + (x[k] + 1,) + x[k + 1:], u), c)
            for eps, a, b, v in self.crossing(u, j):
                if self.e_value(chi, a, b):
                    accumulate(out, (chi, x, v), c if eps > 0 else -c)
        return out

    def times_f(self, terms, v):
        return {(chi, x, u.compose(v)): c for (chi, x, u), c in terms.items()}

    def affine_product(self, left, right):
        """(E_chi x^alpha f_w)(E_psi x^beta f_v) in the affine algebra."""
        chi, alpha, w = left
        psi, beta, v = right
        if chi and chi != act(w, psi):
            return {}
        terms = {(chi, alpha, w): self.one}
        for j, power in enumerate(beta, 1):
            for _ in range(power):
                terms = self.times_x(terms, j)
        return self.times_f(terms, v)

    # -- cyclotomic reduction ---------------------------------------------

    def reduce(self, terms):
        """Bring every exponent below d; identity on the affine algebra."""
        if self.d is None:
            return terms
        d = self.d
        out = {}
        for (chi, x, u), c in terms.items():
            if max(x, default=0) < d:
                accumulate(out, (chi, x, u), c)
                continue
            for (psi, y, z), c2 in self.nf_x(chi, x).items():
                accumulate(out, (psi, y, z.compose(u)), c * c2)
        return out

    def nf_x(self, chi, x):
        """
        Normal form of E_chi x^x when some exponent is >= d.

        Terminates on (total degree, lowest strand with exponent >= d): a
        block start uses the cyclotomic polynomial and lowers the degree;
        any other strand k is conjugated by f = f_{k-1},
            E_chi x^x = f NF(E_{s chi} x^{s x}) f - (E_chi f x^{s x} f - E_chi x^x),
        where the bracket is affine and of lower degree.
        """
        key = (chi, x)
        found = self._nf_cache.get(key)
        if found is not None:
            return found
        d = self.d
        k = next(i for i, e in enumerate(x, 1) if e >= d)
        result = {}
        if k in self.block_starts:
            for m, c in enumerate(self.relation):
                if not c:
                    continue
                y = x[:k - 1] + (x[k - 1] - d + m,) + x[k:]
                if max(y) < d:
                    accumulate(result, (chi, y, self.identity), c)
                else:
                    for term, c2 in self.nf_x(chi, y).items():
                        accumulate(result, term, c * c2)
        else:
            s = self._simple[k - 1]
            s_chi = act(s, chi) if chi else chi
            s_x = s.permute(x)
            for (psi, y, z), c in self.nf_x(s_chi, s_x).items():
                psi_s = act(s, psi) if psi else psi
                conjugate = self.times_f(
                    self.affine_product((psi_s, self.zero_exponents, s), (psi, y, z)), s)
                for term, c2 in self.reduce(conjugate).items():
                    accumulate(result, term, c * c2)
            lower = self.affine_product((chi, self.zero_exponents, s), (s_chi, s_x, s))
            leading = lower.pop((chi, x, self.identity))
            assert leading == 1, "conjugation lost its leading term"
            for term, c in self.reduce(lower).items():
                accumulate(result, term, -c)
        self._nf_cache[key] = result
        return result

    # -- products ---------------------------------------------------------

    def monomial_product(self, left, right):
        key = (left, right)
        found = self._products.get(key)
        if found is None:
            found = self.reduce(self.affine_product(left, right))
            if len(self._products) >= PRODUCT_CACHE_SIZE:
                # simple eviction: drop the oldest entry
                del self._products[next(iter(self._products))]
            self._products[key] = found
        return found

    def multiply(self, left, right):
        out = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                c12 = c1 * c2
                for key, c in self.monomial_product(m1, m2).items():
                    accumulate(out, key, c12 * c)
        return out
