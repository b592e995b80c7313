"""
Symmetrizing forms, Gram matrices and dual bases, semisimplicity, Schur
elements and the simple modules transported along the block isomorphisms.
"""
import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg
from .combinatorics import (
    Composition, enumerate_compositions, enumerate_r_tuples_of_d_partitions,
    multipartition_size,
)
from .errors import DimensionBoundExceeded, NotScalarError, ParameterMismatch, VariantError
from .hecke_algebra import HeckeAlgebra, HParams
from .isomorphism import context, dimension_identity
from .representations import MAX_BUILTIN_BLOCK, tensor_module
from .scalar_field import CycScalar
from .serialization import Report, monomial_to_json

logger = logging.getLogger(__name__)

DEFAULT_DIMENSION_BOUND = 400


@dataclass
class GramData:
    basis: list
    gram: list
    form_name: str

    @property
    def size(self):
        return len(self.basis)


def _field(algebra):
    return algebra.params.field


def _check_bound(algebra, max_dim):
    if not algebra.params.cyclotomic:
        raise VariantError("the affine algebra is infinite-dimensional")
    if max_dim is not None and algebra.dimension > max_dim:
        raise DimensionBoundExceeded(
            f"{algebra.params} has dimension {algebra.dimension} > bound {max_dim}"
        )


def gram_matrix(algebra, form, form_name, basis=None, max_dim=DEFAULT_DIMENSION_BOUND):
    """gram[i][j] = form(b_i b_j)."""
    _check_bound(algebra, max_dim)
    basis = list(basis) if basis is not None else algebra.enumerate_basis()
    elements = [algebra.basis_element(m) for m in basis]
    gram = [[form(a * b) for b in elements] for a in elements]
    logger.debug("gram matrix of %s on %s: %d x %d", form_name, algebra.params, len(basis), len(basis))
    return GramData(basis, gram, form_name)


def dual_basis(gram_data, algebra):
    """b_j^v = sum_k (G^-1)_{kj} b_k, so that form(b_i b_j^v) = delta_ij."""
    inverse = linalg.inverse(gram_data.gram, _field(algebra))
    elements = [algebra.basis_element(m) for m in gram_data.basis]
    dual = []
    for j in range(gram_data.size):
        total = algebra.zero()
        for k, b in enumerate(elements):
            if inverse[k][j]:
                total = total + b.scaled(inverse[k][j])
        dual.append(total)
    return dual


def gram_determinant(gram_data, algebra):
    return linalg.determinant(gram_data.gram, _field(algebra))


# -- forms on Y -------------------------------------------------------------

def form_rho_n(iso, element):
    """sum over mu of tau^mu(Tr(Phi_mu(E_mu e)))."""
    total = CycScalar.zero(iso.r)
    for matrix in iso.phi_full(element).values():
        total = total + matrix.trace_form()
    return total


def named_form(algebra, name):
    """A form by its CLI name: tau, tau-hat, rho-hat-n or rho-n."""
    if isinstance(algebra, HeckeAlgebra):
        if name == 'tau':
            return algebra.form_tau_mu
        raise ParameterMismatch(f"Hecke algebras only carry the form 'tau', not {name!r}")
    if name in ('tau', 'tau-hat'):
        return algebra.form_tau_hat
    if name == 'rho-hat-n':
        return algebra.form_rho_hat_n
    if name == 'rho-n':
        iso = context(algebra.params)
        return lambda element: form_rho_n(iso, element)
    raise ParameterMismatch(f"unknown form {name!r}")


def trace_property_failures(algebra, form, basis=None):
    """Basis pairs (a, b) with form(ab) != form(ba)."""
    basis = list(basis) if basis is not None else algebra.enumerate_basis()
    elements = [algebra.basis_element(m) for m in basis]
    failures = []
    for i, a in enumerate(elements):
        for j in range(i + 1, len(elements)):
            b = elements[j]
            if form(a * b) != form(b * a):
                failures.append((basis[i], basis[j]))
    return failures


def verify_trace_property(algebra, form, form_name, basis=None):
    started = time.perf_counter()
    basis = list(basis) if basis is not None else algebra.enumerate_basis()
    failures = trace_property_failures(algebra, form, basis)
    report = Report(f'trace_property:{form_name}', algebra.params.to_json(),
                    checked=len(basis) * (len(basis) - 1) // 2,
                    witnesses=[{'left': monomial_to_json(a), 'right': monomial_to_json(b)}
                               for a, b in failures],
                    seconds=time.perf_counter() - started)
    logger.info("trace property of %s on %s: %s", form_name, algebra.params, report.status)
    return report


def verify_form_agreement(params):
    """rho-hat-n and rho_n agree on every basis monomial."""
    started = time.perf_counter()
    iso = context(params)
    algebra = iso.algebra
    basis = algebra.enumerate_basis()
    witnesses = []
    for m in basis:
        b = algebra.basis_element(m)
        hat, rho = algebra.form_rho_hat_n(b), form_rho_n(iso, b)
        if hat != rho:
            witnesses.append({'monomial': monomial_to_json(m),
                              'rho_hat_n': hat.to_json(), 'rho_n': rho.to_json()})
    report = Report('rho_hat_n_equals_rho_n', params.to_json(), checked=len(basis),
                    witnesses=witnesses, seconds=time.perf_counter() - started)
    logger.info("rho-hat-n versus rho_n on %s: %s", params, report.status)
    return report


# -- semisimplicity ---------------------------------------------------------

def criterion_value(n, v):
    """n! prod_{i<j} prod_{-n<l<n} (l + v_i - v_j)."""
    value = Fraction(math.factorial(n))
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            for l in range(-n + 1, n):
                value *= l + v[i] - v[j]
    return value


def semisimplicity_criterion(params):
    """
    Split semisimplicity from the parameters alone. For H^mu the criterion
    is applied to every block, since a tensor product over K is semisimple
    exactly when its factors are.
    """
    if not params.cyclotomic:
        raise VariantError("the criterion concerns the cyclotomic quotient")
    if isinstance(params, HParams):
        return all(criterion_value(k, params.v) != 0 for k in params.blocks if k)
    return criterion_value(params.n, params.v) != 0


def regular_trace_gram(algebra, max_dim=DEFAULT_DIMENSION_BOUND):
    """(b_i, b_j) -> trace of left multiplication by b_i b_j on the algebra."""
    _check_bound(algebra, max_dim)
    basis = algebra.enumerate_basis()
    elements = [algebra.basis_element(m) for m in basis]
    products = [[a * b for b in elements] for a in elements]
    r = _field(algebra)
    # trace(L_{b_m}) = sum_k coefficient of b_k in b_m b_k
    traces = {}
    for i, m in enumerate(basis):
        total = CycScalar.zero(r)
        for k, mk in enumerate(basis):
            total = total + products[i][k].coefficient(mk)
        traces[m] = total
    gram = []
    for i in range(len(basis)):
        row = []
        for j in range(len(basis)):
            total = CycScalar.zero(r)
            for m, c in products[i][j].terms.items():
                total = total + c * traces[m]
            row.append(total)
        gram.append(row)
    return GramData(basis, gram, 'regular-trace')


def radical_oracle(algebra, max_dim=DEFAULT_DIMENSION_BOUND):
    """Semisimple iff the regular trace form is non-degenerate (characteristic 0)."""
    gram_data = regular_trace_gram(algebra, max_dim)
    full = linalg.rank(gram_data.gram, _field(algebra)) == gram_data.size
    logger.info("radical oracle on %s: %s", algebra.params, "semisimple" if full else "radical is nonzero")
    return full


def block_semisimplicity(params, max_dim=DEFAULT_DIMENSION_BOUND):
    """{mu: radical oracle on H^mu}."""
    iso = context(params)
    return {mu: radical_oracle(iso.hecke[mu], max_dim) for mu in iso.compositions}


# -- Schur elements ---------------------------------------------------------

def schur_element(algebra, form, rep, gram_data=None):
    """
    The scalar by which sum_b tr(rho(b)) rho(b^v) acts; raises NotScalarError
    if that matrix is not scalar.
    """
    if gram_data is None:
        gram_data = gram_matrix(algebra, form, 'form')
    r = _field(algebra)
    inverse = linalg.inverse(gram_data.gram, r)
    traces = [rep.character(m) for m in gram_data.basis]
    total = linalg.zeros(rep.dimension, rep.dimension, r)
    for k, m in enumerate(gram_data.basis):
        weight = CycScalar.zero(r)
        for j, t in enumerate(traces):
            if t and inverse[k][j]:
                weight = weight + inverse[k][j] * t
        if weight:
            total = linalg.mat_add(total, linalg.mat_scale(rep.matrix(m), weight))
    value = linalg.scalar_value(total)
    if value is None:
        raise NotScalarError(f"central element does not act as a scalar on {rep.label}")
    return value


def simple_module_labels(r, n, d):
    return enumerate_r_tuples_of_d_partitions(r, d, n)


def label_composition(label):
    return Composition(multipartition_size(part) for part in label)


class SimpleModule(NamedTuple):
    label: tuple
    mu: Composition
    hecke_module: object
    module: object


def builtin_simple_modules(params, check=True):
    """
    Transported modules for every label whose blocks all have size <= 2.
    Labels without a built-in module are logged and skipped.
    """
    iso = context(params)
    found = []
    for label in simple_module_labels(params.r, params.n, params.d):
        mu = label_composition(label)
        if max(mu) > MAX_BUILTIN_BLOCK:
            logger.debug("no built-in module for %s", label)
            continue
        try:
            hecke_module = tensor_module(iso.hecke[mu], label)
        except ParameterMismatch as e:
            logger.warning("skipping %s: %s", label, e)
            continue
        module = iso.transport_module(hecke_module, mu, check=check)
        found.append(SimpleModule(label, mu, hecke_module, module))
    return found


def component_schur_elements(params, label):
    """Schur elements of the block modules w.r.t. the single-block forms tau."""
    values = []
    for part in label:
        size = multipartition_size(part)
        if size == 0:
            values.append(CycScalar.one(params.r))
            continue
        local = HeckeAlgebra(HParams.single(size, params.d, params.v, field=params.r))
        rep = tensor_module(local, [part])
        values.append(schur_element(local, local.form_tau_n, rep))
    return values


def schur_product_check(params, simple, rho_gram=None):
    """One row: Schur element of the transported module w.r.t. rho_n versus the product over blocks."""
    iso = context(params)
    if rho_gram is None:
        rho_gram = gram_matrix(iso.algebra, named_form(iso.algebra, 'rho-n'), 'rho-n')
    try:
        product = CycScalar.one(params.r)
        for s in component_schur_elements(params, simple.label):
            product = product * s
    except NotScalarError:
        product = None
    try:
        transported = schur_element(iso.algebra, None, simple.module, rho_gram)
    except NotScalarError:
        transported = None
    return {
        'label': [[list(p) for p in part] for part in simple.label],
        'mu': list(simple.mu),
        'dimension': simple.module.dimension,
        'schur_element': None if transported is None else transported.to_json(),
        'component_product': None if product is None else product.to_json(),
        'match': transported is not None and transported == product,
    }


def schur_table(params, simples=None, check=True):
    """Rows of schur_product_check for every built-in simple module."""
    iso = context(params)
    if simples is None:
        simples = builtin_simple_modules(params, check=check)
    rho_gram = gram_matrix(iso.algebra, named_form(iso.algebra, 'rho-n'), 'rho-n')
    return [schur_product_check(params, simple, rho_gram) for simple in simples]


def schur_report(params, check=True):
    started = time.perf_counter()
    simples = builtin_simple_modules(params, check=check)
    rows = schur_table(params, simples)
    witnesses = [row for row in rows if not row['match']]
    report = Report('schur_product', params.to_json(), checked=len(rows), witnesses=witnesses,
                    details={
                        'rows': rows,
                        'labels': len(simple_module_labels(params.r, params.n, params.d)),
                        'built_in_modules': len(simples),
                        'sum_of_squared_dimensions': sum(s.module.dimension ** 2 for s in simples),
                        'algebra_dimension': params.dimension,
                    },
                    seconds=time.perf_counter() - started)
    logger.info("schur table on %s: %s", params, report.status)
    return report


# -- dimensions -------------------------------------------------------------

def dimension_identity_check(r, n, d):
    return dimension_identity(r, n, d)


def dimension_table(max_r, max_n, max_d):
    rows = []
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            for d in range(1, max_d + 1):
                rows.append({
                    'r': r, 'n': n, 'd': d,
                    'dimension': (r * d) ** n * math.factorial(n),
                    'blocks': len(enumerate_compositions(r, n)),
                    'holds': dimension_identity_check(r, n, d),
                })
    return rows
