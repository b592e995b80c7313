"""
Finite-dimensional modules given by exact matrices on basis monomials, and
the hand-built simple modules of H_k^d for k <= 2 together with their tensor
products over the blocks of H^mu.
"""
import logging

from . import linalg
from .errors import ModuleAxiomError, ParameterMismatch
from .scalar_field import CycScalar

logger = logging.getLogger(__name__)

MAX_BUILTIN_BLOCK = 2


class Representation:
    """b -> rho(b) on the basis monomials of `algebra`, extended linearly."""

    def __init__(self, algebra, dimension, action, label=None):
        self.algebra = algebra
        self.dimension = dimension
        self.label = label
        self._action = action
        self._cache = {}

    @property
    def field(self):
        return self.algebra.params.field

    def matrix(self, monomial):
        found = self._cache.get(monomial)
        if found is None:
            found = self._action(monomial)
            self._cache[monomial] = found
        return found

    def element_matrix(self, element):
        out = linalg.zeros(self.dimension, self.dimension, self.field)
        for m, c in element.terms.items():
            out = linalg.mat_add(out, linalg.mat_scale(self.matrix(m), c))
        return out

    def character(self, monomial):
        return linalg.trace(self.matrix(monomial), self.field)

    def check_module_axioms(self, pairs=None):
        """rho(1) = I and rho(a)rho(b) = rho(ab) on the given (or all) basis pairs."""
        if self.element_matrix(self.algebra.one()) != linalg.identity(self.dimension, self.field):
            raise ModuleAxiomError(f"{self.label}: the unit does not act as the identity")
        if pairs is None:
            basis = self.algebra.enumerate_basis()
            pairs = [(a, b) for a in basis for b in basis]
        for a, b in pairs:
            product = self.algebra.basis_element(a) * self.algebra.basis_element(b)
            if linalg.mat_mul(self.matrix(a), self.matrix(b)) != self.element_matrix(product):
                raise ModuleAxiomError(
                    f"{self.label}: rho({self.algebra.monomial_name(a)}) "
                    f"rho({self.algebra.monomial_name(b)}) != rho(product)"
                )
        logger.debug("module axioms hold for %s on %d pairs", self.label, len(pairs))
        return True


def hecke_module(algebra, x_images, s_images, label=None):
    """
    Module of H^mu from the images of x_1..x_n and of the simple
    transpositions s_i lying in the Young subgroup.
    """
    dimension = len(x_images[0]) if x_images else 1
    r = algebra.field

    def action(monomial):
        xexp, w = monomial
        out = linalg.identity(dimension, r)
        for i, e in enumerate(xexp):
            for _ in range(e):
                out = linalg.mat_mul(out, x_images[i])
        for i in w.reduced_word():
            out = linalg.mat_mul(out, s_images[i])
        return out

    return Representation(algebra, dimension, action, label)


def _scalar(r, value):
    return CycScalar.from_rational(r, value)


def local_images(multipartition, v, r):
    """
    (dimension, x images, s images) of the simple H_k^d-module labelled by a
    d-partition of k <= 2:

      k = 1, (1) in component i: x_1 -> v_i;
      k = 2, (2) or (1,1) in component i: s -> +1 or -1, x_1 -> v_i, x_2 -> v_i +- 1;
      k = 2, (1) in components i < j with v_j - v_i != 0, +-1:
             x_1 -> diag(v_i, v_j), x_2 -> diag(v_j, v_i),
             s -> [[p, 1 - p^2], [1, -p]] with p = 1/(v_j - v_i).
    """
    size = sum(sum(p) for p in multipartition)
    occupied = [(i, p) for i, p in enumerate(multipartition) if p]
    if size == 0:
        return 1, [], {}
    if size == 1:
        (i, _), = occupied
        return 1, [[[_scalar(r, v[i])]]], {}
    if size != MAX_BUILTIN_BLOCK:
        raise ParameterMismatch(f"no built-in module for blocks of size {size}")
    if len(occupied) == 1:
        (i, shape), = occupied
        sign = 1 if tuple(shape) == (2,) else -1
        a = v[i]
        return 1, [[[_scalar(r, a)]], [[_scalar(r, a + sign)]]], {1: [[_scalar(r, sign)]]}
    (i, _), (j, _) = occupied
    a, b = v[i], v[j]
    if a == b:
        raise ParameterMismatch(f"components {i + 1} and {j + 1} carry equal parameters {a}")
    p = 1 / (b - a)
    if p * p == 1:
        raise ParameterMismatch(f"components {i + 1} and {j + 1} differ by one; the module is reducible")
    zero = _scalar(r, 0)
    x1 = [[_scalar(r, a), zero], [zero, _scalar(r, b)]]
    x2 = [[_scalar(r, b), zero], [zero, _scalar(r, a)]]
    s = [[_scalar(r, p), _scalar(r, 1 - p * p)], [_scalar(r, 1), _scalar(r, -p)]]
    return 2, [x1, x2], {1: s}


def tensor_module(algebra, labels):
    """
    The outer tensor product over the blocks of H^mu of the built-in modules
    labelled by one d-partition per block.
    """
    blocks = algebra.blocks.blocks()
    if len(labels) != len(blocks):
        raise ParameterMismatch(f"{len(labels)} labels for {len(blocks)} blocks")
    r = algebra.field
    v = algebra.params.v
    local = []
    for block, label in zip(blocks, labels):
        if sum(sum(p) for p in label) != len(block):
            raise ParameterMismatch(f"label {label} does not fit a block of size {len(block)}")
        local.append(local_images(label, v, r))
    dims = [dim for dim, _, _ in local]

    def embed(position, matrix):
        out = [[_scalar(r, 1)]]
        for a, dim in enumerate(dims):
            out = linalg.kron(out, matrix if a == position else linalg.identity(dim, r))
        return out

    x_images = []
    s_images = {}
    for a, (block, (_, xs, ss)) in enumerate(zip(blocks, local)):
        x_images.extend(embed(a, x) for x in xs)
        for i, s in ss.items():
            s_images[block[0] + i - 1] = embed(a, s)
    if not x_images:
        raise ParameterMismatch("empty algebra")
    return hecke_module(algebra, x_images, s_images, label=tuple(labels))
