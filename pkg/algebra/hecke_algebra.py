"""
Degenerate affine and cyclotomic Hecke algebras of type A and their tensor
products H^mu = H_{mu_1} (x) ... (x) H_{mu_r}, kept on n global strands with
Coxeter elements restricted to the Young subgroup of mu.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .combinatorics import (
    Composition, Permutation, characters_of, in_young_subgroup, young_subgroup,
)
from .element import Element
from .errors import IndexOutOfRange, NotInYoungSubgroup, ParameterMismatch, VariantError
from .rewriting import RewritingEngine
from .scalar_field import CycScalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HParams:
    blocks: tuple
    d: Optional[int] = None
    v: tuple = ()
    field: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'blocks', Composition(int(p) for p in self.blocks))
        object.__setattr__(self, 'v', tuple(Fraction(p) for p in self.v))
        if any(p < 0 for p in self.blocks) or self.blocks.size < 1:
            raise ParameterMismatch(f"bad block sizes {tuple(self.blocks)}")
        if self.d is None:
            if self.v:
                raise ParameterMismatch("the affine algebra takes no cyclotomic parameters")
        elif self.d < 1 or len(self.v) != self.d:
            raise ParameterMismatch(f"level d={self.d} needs exactly d parameters, got {len(self.v)}")

    @classmethod
    def single(cls, n, d=None, v=(), field=1):
        return cls((n,), d, v, field)

    @property
    def n(self):
        return self.blocks.size

    @property
    def cyclotomic(self):
        return self.d is not None

    @property
    def dimension(self):
        if self.d is None:
            raise VariantError("the affine algebra is infinite-dimensional")
        return self.d ** self.n * math.prod(math.factorial(p) for p in self.blocks)

    def to_json(self):
        return {
            'mu': list(self.blocks),
            'd': self.d,
            'v': [str(p) for p in self.v],
            'field': self.field,
        }

    def __str__(self):
        return f"H^{tuple(self.blocks)}(d={self.d}, v={','.join(str(p) for p in self.v)})"


class HMonomial(NamedTuple):
    xexp: tuple
    w: Permutation


class HElement(Element):
    pass


class HeckeAlgebra:

    def __init__(self, params):
        self.params = params
        self.blocks = params.blocks
        self.n = params.n
        self.d = params.d
        self.field = params.field
        self.engine = RewritingEngine(self.n, self.field, params.d, params.v,
                                      block_starts=self.blocks.block_starts())
        self.identity = Permutation.identity(self.n)
        self.zero_exponents = (0,) * self.n

    @property
    def cyclotomic(self):
        return self.params.cyclotomic

    def scalar(self, value):
        if isinstance(value, CycScalar):
            if value.r != self.field and not value.is_rational():
                raise ParameterMismatch(f"scalar from Q(zeta_{value.r}) in {self.params}")
            return value if value.r == self.field else CycScalar.from_rational(self.field, value.coeffs[0])
        return CycScalar.from_rational(self.field, value)

    def monomial_name(self, m):
        xexp, w = m
        parts = [f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(xexp, 1) if e]
        if not w.is_identity():
            parts.append(f"s{list(w)}")
        return '*'.join(parts) or '1'

    # -- construction -----------------------------------------------------

    def _wrap(self, terms):
        return HElement(self, {HMonomial(x, w): c for (_, x, w), c in terms.items()})

    def _unwrap(self, element):
        return {((), x, w): c for (x, w), c in element.terms.items()}

    def element(self, terms=None):
        out = {}
        for (xexp, w), c in (terms or {}).items():
            out[self.validate_monomial(xexp, w)] = self.scalar(c)
        return HElement(self, out)

    def zero(self):
        return HElement(self)

    def one(self):
        return HElement(self, {HMonomial(self.zero_exponents, self.identity): self.engine.one})

    def validate_monomial(self, xexp, w):
        w = Permutation.checked(w)
        xexp = tuple(int(e) for e in xexp)
        if len(w) != self.n or len(xexp) != self.n:
            raise ParameterMismatch(f"monomial does not live on {self.n} strands")
        if any(e < 0 for e in xexp):
            raise IndexOutOfRange(f"negative exponent in {list(xexp)}")
        if not in_young_subgroup(w, self.blocks):
            raise NotInYoungSubgroup(f"{list(w)} leaves the Young subgroup of {tuple(self.blocks)}")
        return HMonomial(xexp, w)

    def monomial(self, xexp=None, w=None, coeff=1):
        m = self.validate_monomial(
            self.zero_exponents if xexp is None else xexp,
            self.identity if w is None else w,
        )
        element = HElement(self, {m: self.scalar(coeff)})
        return self.normal_form(element)

    def basis_element(self, m):
        return HElement(self, {m: self.engine.one})

    def x(self, i):
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"x_{i} does not exist on {self.n} strands")
        return self.monomial(tuple(1 if j == i else 0 for j in range(1, self.n + 1)))

    def s(self, i):
        return self.monomial(w=Permutation.transposition(self.n, i))

    def w_bar(self, w):
        return self.monomial(w=w)

    # -- multiplication ---------------------------------------------------

    def multiply(self, a, b):
        if a.algebra.params != self.params or b.algebra.params != self.params:
            raise ParameterMismatch("operands belong to a different algebra")
        return self._wrap(self.engine.multiply(self._unwrap(a), self._unwrap(b)))

    def normal_form(self, element):
        return self._wrap(self.engine.reduce(self._unwrap(element)))

    # -- blocks -----------------------------------------------------------

    def block_factors(self, m):
        """Per-block (local exponents, local permutation) of a monomial."""
        xexp, w = m
        factors = []
        for block in self.blocks.blocks():
            if not block:
                factors.append(((), Permutation(())))
                continue
            offset = block[0] - 1
            if not all(block[0] <= w(i) <= block[-1] for i in block):
                raise NotInYoungSubgroup(f"{list(w)} leaves the Young subgroup of {tuple(self.blocks)}")
            factors.append((
                tuple(xexp[i - 1] for i in block),
                Permutation(w(i) - offset for i in block),
            ))
        return factors

    def from_block_factors(self, factors):
        """Inverse of block_factors."""
        xexp, images = [], []
        offset = 0
        for local_x, local_w in factors:
            xexp.extend(local_x)
            images.extend(j + offset for j in local_w)
            offset += len(local_x)
        return HMonomial(tuple(xexp), Permutation(images))

    # -- forms ------------------------------------------------------------

    def _require_cyclotomic(self, operation):
        if not self.cyclotomic:
            raise VariantError(f"{operation} needs the cyclotomic quotient")

    def form_tau_n(self, element):
        """Coefficient of x^(d-1,...,d-1); defined on a single block only."""
        self._require_cyclotomic("form_tau_n")
        if sum(1 for p in self.blocks if p) != 1:
            raise ParameterMismatch(f"form_tau_n needs a single block, got {tuple(self.blocks)}")
        return self.form_tau_mu(element)

    def form_tau_mu(self, element):
        """Product over blocks of the single-block forms, extended linearly."""
        self._require_cyclotomic("form_tau_mu")
        total = CycScalar.zero(self.field)
        for m, c in element.terms.items():
            value = 1
            for local_x, local_w in self.block_factors(m):
                # tau_k(x^a w) is 1 exactly on the top monomial with w = 1
                if not (all(e == self.d - 1 for e in local_x) and local_w.is_identity()):
                    value = 0
                    break
            if value:
                total = total + c
        return total

    def enumerate_basis(self):
        self._require_cyclotomic("enumerate_basis")
        return [HMonomial(x, w)
                for x in itertools.product(range(self.d), repeat=self.n)
                for w in young_subgroup(self.blocks)]

    @property
    def dimension(self):
        return self.params.dimension


class MatrixOverH:
    """A square matrix over H^mu indexed by the characters of composition mu."""

    __hash__ = None

    def __init__(self, algebra, entries=None):
        self.algebra = algebra
        self.mu = algebra.blocks
        self.index = characters_of(self.mu)
        positions = set(self.index)
        self.entries = {}
        for (row, col), h in (entries or {}).items():
            if row not in positions or col not in positions:
                raise ParameterMismatch(f"({list(row)}, {list(col)}) is not an index of block {tuple(self.mu)}")
            if h.algebra.params != algebra.params:
                raise ParameterMismatch("matrix entry from a different algebra")
            if not h.is_zero():
                self.entries[(row, col)] = h

    @classmethod
    def identity(cls, algebra):
        one = algebra.one()
        return cls(algebra, {(chi, chi): one for chi in characters_of(algebra.blocks)})

    @classmethod
    def unit(cls, algebra, row, col, h=None):
        """The matrix unit 1_{row,col}, optionally carrying the entry h."""
        return cls(algebra, {(row, col): algebra.one() if h is None else h})

    @property
    def size(self):
        return len(self.index)

    def entry(self, row, col):
        return self.entries.get((row, col), self.algebra.zero())

    def _check(self, other):
        if not isinstance(other, MatrixOverH) or other.algebra.params != self.algebra.params:
            raise ParameterMismatch("matrices over different algebras")

    def __add__(self, other):
        self._check(other)
        entries = dict(self.entries)
        for key, h in other.entries.items():
            entries[key] = entries[key] + h if key in entries else h
        return MatrixOverH(self.algebra, entries)

    def __neg__(self):
        return MatrixOverH(self.algebra, {k: -h for k, h in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, coeff):
        return MatrixOverH(self.algebra, {k: h.scaled(coeff) for k, h in self.entries.items()})

    def __mul__(self, other):
        if not isinstance(other, MatrixOverH):
            return self.scaled(other)
        self._check(other)
        by_row = {}
        for (k, j), h in other.entries.items():
            by_row.setdefault(k, []).append((j, h))
        entries = {}
        for (i, k), g in self.entries.items():
            for j, h in by_row.get(k, ()):
                product = g * h
                entries[(i, j)] = entries[(i, j)] + product if (i, j) in entries else product
        return MatrixOverH(self.algebra, entries)

    def __eq__(self, other):
        if not isinstance(other, MatrixOverH):
            return NotImplemented
        return self.algebra.params == other.algebra.params and self.entries == other.entries

    def is_zero(self):
        return not self.entries

    def trace(self):
        total = self.algebra.zero()
        for chi in self.index:
            if (chi, chi) in self.entries:
                total = total + self.entries[(chi, chi)]
        return total

    def trace_form(self):
        """tau^mu of the matrix trace."""
        return self.algebra.form_tau_mu(self.trace())

    def __repr__(self):
        rows = ', '.join(f"[{list(i)},{list(j)}]: {h!r}" for (i, j), h in sorted(self.entries.items()))
        return f"MatrixOverH({tuple(self.mu)}, {{{rows}}})"


def mat_multiply(a, b):
    return a * b


def mat_trace_form(a):
    return a.trace_form()
