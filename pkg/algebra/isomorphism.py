"""
The block isomorphisms Phi_mu : E_mu Y E_mu -> Mat_{m_mu}(H^mu), their
inverses Psi_mu, the direct sums over all r-compositions, and the module
transport they induce.

    Phi_mu(E_chi x^a f_w) = 1_{chi, w^-1(chi)} x^{pi_chi^-1 . a} (pi_chi^-1 w pi_{w^-1(chi)})
    Psi_mu(1_{chi, chi'} x^a g) = E_chi x^{pi_chi . a} f_{pi_chi g pi_chi'^-1}
"""
import itertools
import logging
import math
import random
import time
from typing import NamedTuple

from . import linalg
from .combinatorics import (
    Composition, act, characters_of, chi0, comp_of, enumerate_compositions,
    in_young_subgroup, m_mu, pi_chi,
)
from .errors import NotInYoungSubgroup, ParameterMismatch
from .hecke_algebra import HElement, HeckeAlgebra, HMonomial, HParams, MatrixOverH
from .representations import Representation
from .rewriting import accumulate
from .serialization import Report, images_to_json, monomial_to_json
from .yokonuma_algebra import YElement, YMonomial, YokonumaAlgebra

logger = logging.getLogger(__name__)

# affine sweeps cover basis monomials of total x-degree at most this
AFFINE_DEGREE_BOUND = 1


class BlockImage(NamedTuple):
    mu: Composition
    matrix: MatrixOverH


class Isomorphism:

    def __init__(self, algebra):
        self.algebra = algebra
        params = algebra.params
        self.r = params.r
        self.n = params.n
        self.compositions = [Composition(mu) for mu in enumerate_compositions(self.r, self.n)]
        self.hecke = {
            mu: HeckeAlgebra(HParams(mu, params.d, params.v, field=self.r))
            for mu in self.compositions
        }
        self._pi = {}
        self._phi_basis = {}

    @property
    def params(self):
        return self.algebra.params

    def pi(self, chi):
        found = self._pi.get(chi)
        if found is None:
            found = pi_chi(chi, self.r)
            self._pi[chi] = found
        return found

    def hecke_algebra(self, mu):
        try:
            return self.hecke[Composition(mu)]
        except KeyError:
            raise ParameterMismatch(f"{tuple(mu)} is not an {self.r}-composition of {self.n}") from None

    # -- single monomials -------------------------------------------------

    def phi_monomial(self, m):
        """(mu, row, column, H-monomial) of the matrix unit Phi sends E_chi x^a f_w to."""
        chi, alpha, w = m
        mu = comp_of(chi, self.r)
        col = act(w.inverse(), chi)
        p_row, p_col = self.pi(chi), self.pi(col)
        g = p_row.inverse().compose(w).compose(p_col)
        if not in_young_subgroup(g, mu):
            raise NotInYoungSubgroup(
                f"pi_chi^-1 w pi_chi' = {list(g)} left the Young subgroup of {tuple(mu)}"
            )
        return mu, chi, col, HMonomial(p_row.inverse().permute(alpha), g)

    def psi_monomial(self, row, col, h):
        xexp, g = h
        p_row, p_col = self.pi(row), self.pi(col)
        return YMonomial(row, p_row.permute(xexp), p_row.compose(g).compose(p_col.inverse()))

    # -- block maps -------------------------------------------------------

    def phi_mu(self, element, mu):
        mu = Composition(mu)
        hecke = self.hecke_algebra(mu)
        entries = {}
        for m, c in element.terms.items():
            block, row, col, h = self.phi_monomial(m)
            if block != mu:
                raise ParameterMismatch(
                    f"{self.algebra.monomial_name(m)} lies in block {tuple(block)}, not {tuple(mu)}"
                )
            accumulate(entries.setdefault((row, col), {}), h, c)
        return MatrixOverH(hecke, {key: HElement(hecke, terms) for key, terms in entries.items()})

    def psi_mu(self, matrix):
        if matrix.algebra.params not in (h.params for h in self.hecke.values()):
            raise ParameterMismatch(f"matrix over {matrix.algebra.params} is not a block of {self.params}")
        terms = {}
        for (row, col), h in matrix.entries.items():
            for monomial, c in h.terms.items():
                accumulate(terms, self.psi_monomial(row, col, monomial), c)
        return YElement(self.algebra, terms)

    def phi_full(self, element):
        """Split along the central idempotents E_mu, then apply Phi_mu blockwise."""
        images = {}
        for mu in self.compositions:
            part = self.algebra.block_idempotent(mu) * element
            images[mu] = self.phi_mu(part, mu)
        return images

    def phi_full_by_filtering(self, element):
        """Same as phi_full, splitting terms by the composition of their character."""
        parts = {mu: {} for mu in self.compositions}
        for m, c in element.terms.items():
            parts[comp_of(m.chi, self.r)][m] = c
        return {mu: self.phi_mu(YElement(self.algebra, terms), mu) for mu, terms in parts.items()}

    def psi_full(self, images):
        total = self.algebra.zero()
        for matrix in images.values():
            total = total + self.psi_mu(matrix)
        return total

    def block_images(self, element):
        return [BlockImage(mu, matrix) for mu, matrix in self.phi_full(element).items()]

    def corner_embedding(self, h, mu):
        """H^mu -> E_{chi0} Y E_{chi0}, x^a w -> E_{chi0} x^a f_w."""
        mu = Composition(mu)
        if h.algebra.params != self.hecke_algebra(mu).params:
            raise ParameterMismatch("element is not in the requested block algebra")
        base = chi0(mu)
        return YElement(self.algebra, {
            YMonomial(base, xexp, w): c for (xexp, w), c in h.terms.items()
        })

    # -- checks -----------------------------------------------------------

    def phi_basis(self, m):
        """(mu, Phi_mu(m)) for a basis monomial, memoized."""
        found = self._phi_basis.get(m)
        if found is None:
            mu, row, col, h = self.phi_monomial(m)
            hecke = self.hecke[mu]
            found = (mu, MatrixOverH.unit(hecke, row, col, hecke.basis_element(h)))
            self._phi_basis[m] = found
        return found

    def multiplicative_on(self, a, b):
        """Phi(ab) == Phi(a) Phi(b) for two basis monomials."""
        mu_a, image_a = self.phi_basis(a)
        mu_b, image_b = self.phi_basis(b)
        product = self.phi_full_by_filtering(self.algebra.basis_element(a) * self.algebra.basis_element(b))
        for mu, matrix in product.items():
            if mu == mu_a == mu_b:
                if matrix != image_a * image_b:
                    return False
            elif not matrix.is_zero():
                return False
        return True

    def round_trip_failures(self, basis):
        """Basis monomials b with Psi(Phi(b)) != b or Phi(Psi(unit image)) != unit image."""
        failures = []
        for m in basis:
            b = self.algebra.basis_element(m)
            images = self.phi_full(b)
            if self.psi_full(images) != b:
                failures.append(('psi_phi', m))
            mu, row, col, h = self.phi_monomial(m)
            hecke = self.hecke[mu]
            unit = MatrixOverH.unit(hecke, row, col, hecke.basis_element(h))
            if self.phi_mu(self.psi_mu(unit), mu) != unit:
                failures.append(('phi_psi', m))
        return failures

    def coset_commutation_failures(self):
        """(chi, a) with E_chi x^{pi_chi . a} f_{pi_chi} != E_chi f_{pi_chi} x^a."""
        algebra = self.algebra
        failures = []
        for mu in self.compositions:
            for chi in characters_of(mu):
                p = self.pi(chi)
                for alpha in itertools.product(range(algebra.d), repeat=algebra.n):
                    left = algebra.monomial(chi, p.permute(alpha), p)
                    right = algebra.monomial(chi, w=p) * algebra.monomial(act(p.inverse(), chi), alpha)
                    if left != right:
                        failures.append((chi, alpha))
        return failures

    def transport_module(self, rep, mu, check=True):
        """
        The Y-module of dimension k * m_mu on which b acts by substituting rep
        into Phi_mu(E_mu b) entrywise.
        """
        mu = Composition(mu)
        hecke = self.hecke_algebra(mu)
        if rep.algebra.params != hecke.params:
            raise ParameterMismatch(f"representation of {rep.algebra.params}, expected {hecke.params}")
        if check:
            rep.check_module_axioms()
        index = {chi: i for i, chi in enumerate(characters_of(mu))}
        k = rep.dimension
        size = k * len(index)
        r = self.r

        def action(m):
            out = linalg.zeros(size, size, r)
            if comp_of(m.chi, r) != mu:
                return out
            _, row, col, h = self.phi_monomial(m)
            block = rep.matrix(h)
            top, left = index[row] * k, index[col] * k
            for i in range(k):
                for j in range(k):
                    out[top + i][left + j] = block[i][j]
            return out

        return Representation(self.algebra, size, action, label=(tuple(mu), rep.label))


def dimension_identity(r, n, d):
    """(r d)^n n! == sum_mu m_mu^2 d^n prod mu_a!."""
    left = (r * d) ** n * math.factorial(n)
    right = sum(
        m_mu(mu) ** 2 * d ** n * math.prod(math.factorial(p) for p in mu)
        for mu in enumerate_compositions(r, n)
    )
    return left == right


_contexts = {}


def context(params):
    """Per-process Isomorphism for params, shared by sweep chunks."""
    found = _contexts.get(params)
    if found is None:
        found = Isomorphism(YokonumaAlgebra(params))
        _contexts[params] = found
    return found


def homomorphism_chunk(params, pairs):
    """Failing basis-index pairs among `pairs`; a unit of work for a sweep."""
    iso = context(params)
    basis = basis_of(params)
    failures = [(i, j) for i, j in pairs if not iso.multiplicative_on(basis[i], basis[j])]
    logger.debug("checked %d pairs, %d failures", len(pairs), len(failures))
    return failures


def basis_of(params):
    iso = context(params)
    if params.cyclotomic:
        return iso.algebra.enumerate_basis()
    return iso.algebra.enumerate_basis(AFFINE_DEGREE_BOUND)


def serial_runner(func, params, items):
    return func(params, items)


def all_pairs(size):
    return [(i, j) for i in range(size) for j in range(size)]


def sample_pairs(size, count, seed):
    """count seeded random ordered pairs of basis indices."""
    rng = random.Random(seed)
    return [(rng.randrange(size), rng.randrange(size)) for _ in range(count)]


def verify_homomorphism(params, pairs=None, runner=serial_runner):
    """Phi(ab) == Phi(a) Phi(b) on basis-index pairs (all pairs by default)."""
    started = time.perf_counter()
    iso = context(params)
    basis = basis_of(params)
    if pairs is None:
        pairs = all_pairs(len(basis))
    failures = sorted(runner(homomorphism_chunk, params, pairs))
    witnesses = []
    for i, j in failures:
        a, b = basis[i], basis[j]
        left, right = iso.algebra.basis_element(a), iso.algebra.basis_element(b)
        left_images, right_images = iso.phi_full(left), iso.phi_full(right)
        witnesses.append({
            'left': monomial_to_json(a),
            'right': monomial_to_json(b),
            'phi_of_product': images_to_json(iso.phi_full(left * right)),
            'product_of_phi': images_to_json({
                mu: left_images[mu] * right_images[mu] for mu in iso.compositions
            }),
        })
    report = Report('homomorphism', params.to_json(), checked=len(pairs), witnesses=witnesses,
                    seconds=time.perf_counter() - started)
    logger.info("homomorphism on %s: %d pairs, %s", params, len(pairs), report.status)
    return report


def verify_bijection(params):
    started = time.perf_counter()
    iso = context(params)
    basis = basis_of(params)
    witnesses = [{'direction': direction, 'monomial': monomial_to_json(m)}
                 for direction, m in iso.round_trip_failures(basis)]
    report = Report('bijection', params.to_json(), checked=len(basis), witnesses=witnesses,
                    seconds=time.perf_counter() - started)
    logger.info("bijection on %s: %d monomials, %s", params, len(basis), report.status)
    return report


def verify_coset_commutation(params):
    started = time.perf_counter()
    iso = context(params)
    failures = iso.coset_commutation_failures()
    checked = sum(len(characters_of(mu)) for mu in iso.compositions) * params.d ** params.n
    report = Report('coset_commutation', params.to_json(), checked=checked,
                    witnesses=[{'chi': list(chi), 'alpha': list(alpha)} for chi, alpha in failures],
                    seconds=time.perf_counter() - started)
    logger.info("coset commutation on %s: %s", params, report.status)
    return report


def verify_conjugation(params):
    started = time.perf_counter()
    algebra = context(params).algebra
    failures = algebra.conjugation_failures()
    report = Report('conjugation', params.to_json(),
                    checked=math.factorial(params.n) * params.r ** params.n,
                    witnesses=[{'w': list(w), 'chi': list(chi)} for w, chi in failures],
                    seconds=time.perf_counter() - started)
    logger.info("conjugation on %s: %s", params, report.status)
    return report
