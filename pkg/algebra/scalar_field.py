"""
Exact arithmetic in Q and in the cyclotomic field K = Q(zeta_r).

A CycScalar is a polynomial in zeta of degree < phi(r) with Fraction
coefficients, reduced modulo the r-th cyclotomic polynomial. Roots of unity
are enumerated as zeta_a := zeta^(a-1), so characters add their indices.
"""
import logging
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, QQ, divisors, gcdex, rem, symbols

from .errors import FormatError, IndexOutOfRange, ParameterMismatch

logger = logging.getLogger(__name__)

Z = symbols('z')


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r):
    """
    The r-th cyclotomic polynomial as an integer Poly in z, obtained by
    exact division of z^r - 1 by the cyclotomic polynomials of the proper
    divisors of r.
    """
    if r < 1:
        raise IndexOutOfRange(f"cyclotomic polynomial needs r >= 1, got {r}")
    poly = Poly(Z**r - 1, Z, domain='ZZ')
    for s in divisors(r)[:-1]:
        # exquo raises if the division is not exact
        poly = poly.exquo(cyclotomic_polynomial(s))
    return poly


class _FieldData:
    """Per-r tables: degree, reduction of z^k and the r powers of zeta."""

    def __init__(self, r):
        self.r = r
        self.modulus = cyclotomic_polynomial(r)
        self.degree = self.modulus.degree()
        self.modulus_qq = self.modulus.set_domain(QQ)
        # z^k mod Phi_r for every k a product of two reduced elements can reach
        self.reduction = tuple(
            self._reduce_power(k) for k in range(max(2 * self.degree - 1, r))
        )

    def _reduce_power(self, k):
        remainder = rem(Poly(Z**k, Z, domain='ZZ'), self.modulus)
        coeffs = [0] * self.degree
        for (power,), c in remainder.terms():
            coeffs[power] = int(c)
        return tuple(coeffs)


@lru_cache(maxsize=None)
def field_data(r):
    if r < 1:
        raise IndexOutOfRange(f"root-of-unity order must be >= 1, got {r}")
    logger.debug("building cyclotomic tables for r=%d", r)
    return _FieldData(r)


def euler_phi(r):
    return field_data(r).degree


def _make(r, coeffs):
    scalar = object.__new__(CycScalar)
    scalar.r = r
    scalar.coeffs = coeffs
    return scalar


class CycScalar:
    """An immutable element of Q(zeta_r)."""

    __slots__ = ('r', 'coeffs')

    def __init__(self, r, coeffs):
        degree = field_data(r).degree
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != degree:
            raise ParameterMismatch(
                f"Q(zeta_{r}) elements need {degree} coefficients, got {len(coeffs)}"
            )
        self.r = r
        self.coeffs = coeffs

    @classmethod
    def from_rational(cls, r, value):
        degree = field_data(r).degree
        return _make(r, (Fraction(value),) + (Fraction(0),) * (degree - 1))

    @classmethod
    def zero(cls, r):
        return cls.from_rational(r, 0)

    @classmethod
    def one(cls, r):
        return cls.from_rational(r, 1)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.r == self.r:
                return self, other
            if other.is_rational():
                return self, CycScalar.from_rational(self.r, other.coeffs[0])
            if self.is_rational():
                return CycScalar.from_rational(other.r, self.coeffs[0]), other
            raise ParameterMismatch(f"cannot mix Q(zeta_{self.r}) and Q(zeta_{other.r})")
        if isinstance(other, (int, Fraction)):
            return self, CycScalar.from_rational(self.r, other)
        return None, None

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return _make(a.r, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return _make(self.r, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return _make(a.r, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _make(self.r, tuple(x * other for x in self.coeffs))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if len(a.coeffs) == 1:
            return _make(a.r, (a.coeffs[0] * b.coeffs[0],))
        if b.is_rational():
            c = b.coeffs[0]
            return _make(a.r, tuple(x * c for x in a.coeffs))
        if a.is_rational():
            c = a.coeffs[0]
            return _make(a.r, tuple(c * y for y in b.coeffs))
        data = field_data(a.r)
        out = [Fraction(0)] * data.degree
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(data.reduction[i + j]):
                    if c:
                        out[k] += c * xy
        return _make(a.r, tuple(out))

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_r."""
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.r)
        if self.is_rational():
            return CycScalar.from_rational(self.r, 1 / self.coeffs[0])
        data = field_data(self.r)
        poly = Poly(list(reversed(self.coeffs)), Z, domain=QQ)
        s, _, h = gcdex(poly, data.modulus_qq)
        # Phi_r is irreducible, so the gcd is a nonzero constant
        s = s.quo_ground(h.LC())
        coeffs = [Fraction(0)] * data.degree
        for (power,), c in s.terms():
            coeffs[power] = Fraction(int(c.p), int(c.q))
        return _make(self.r, tuple(coeffs))

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, k):
        if k < 0:
            return self.invert() ** (-k)
        result = CycScalar.one(self.r)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            a, b = self._coerce(other)
        except ParameterMismatch:
            return False
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.r, self.coeffs))

    def __repr__(self):
        return f"CycScalar({self.r}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                parts.append(str(c))
            else:
                monomial = 'ζ' if power == 1 else f'ζ^{power}'
                parts.append(monomial if c == 1 else f'{c}*{monomial}')
        return ' + '.join(parts) if parts else '0'

    def to_json(self):
        return {
            'r': self.r,
            'coeffs': [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, payload):
        try:
            r = int(payload['r'])
            coeffs = [Fraction(int(num), int(den)) for num, den in payload['coeffs']]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise FormatError(f"malformed scalar {payload!r}: {e}") from e
        try:
            return cls(r, coeffs)
        except (ParameterMismatch, IndexOutOfRange) as e:
            raise FormatError(str(e)) from e


def zeta(r, a):
    """zeta_a = zeta^(a-1), the a-th r-th root of unity (1 <= a <= r)."""
    if not 1 <= a <= r:
        raise IndexOutOfRange(f"root index {a} outside 1..{r}")
    data = field_data(r)
    return _make(r, tuple(Fraction(c) for c in data.reduction[a - 1]))


def zeta_power(r, k):
    """zeta^k for any integer k."""
    return zeta(r, k % r + 1)


def parse_rational(text):
    """Parse a decimal rational string such as '3', '-1/2' or '0'."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"not a rational number: {text!r}") from e
