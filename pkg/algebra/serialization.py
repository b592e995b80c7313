"""
JSON codecs for parameters, elements, matrices and verification reports.

Every document carries a top-level "format_version"; rationals travel as
decimal strings "p/q" and scalars as {"r": ..., "coeffs": [[num, den], ...]}.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Optional

from .combinatorics import Character, Permutation
from .errors import AlgebraError, FormatError
from .hecke_algebra import HeckeAlgebra, HElement, HParams, MatrixOverH
from .scalar_field import CycScalar, parse_rational
from .t_presentation import TElement, TMonomial, TPresentation
from .yokonuma_algebra import YElement, YMonomial, YokonumaAlgebra, YParams

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
LIBRARY_VERSION = "1.0.0"


@dataclass
class Report:
    check: str
    params: dict
    checked: int = 0
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: Optional[float] = None

    @property
    def passed(self):
        return not self.witnesses

    @property
    def status(self):
        return 'pass' if self.passed else 'fail'

    def to_json(self, with_timing=False):
        payload = {
            'check': self.check,
            'params': self.params,
            'status': self.status,
            'checked': self.checked,
            'witnesses': self.witnesses,
        }
        if self.details:
            payload['details'] = self.details
        if with_timing and self.seconds is not None:
            payload['seconds'] = round(self.seconds, 3)
        return payload


# -- documents ------------------------------------------------------------

def dumps(payload):
    document = {'format_version': FORMAT_VERSION, 'library_version': LIBRARY_VERSION}
    document.update(payload)
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def loads(text):
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    if not isinstance(document, dict):
        raise FormatError("top-level JSON value must be an object")
    version = document.get('format_version')
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {version!r}, expected {FORMAT_VERSION}")
    return document


def require(payload, key):
    try:
        return payload[key]
    except (KeyError, TypeError):
        raise FormatError(f"missing field {key!r}") from None


# -- parameters -----------------------------------------------------------

def y_params_from_json(payload):
    try:
        d = payload.get('d')
        return YParams(
            int(require(payload, 'r')),
            int(require(payload, 'n')),
            None if d is None else int(d),
            tuple(parse_rational(v) for v in payload.get('v', [])),
        )
    except (TypeError, ValueError, AttributeError) as e:
        if isinstance(e, AlgebraError):
            raise
        raise FormatError(f"malformed parameters {payload!r}: {e}") from e


def h_params_from_json(payload):
    try:
        d = payload.get('d')
        return HParams(
            tuple(int(p) for p in require(payload, 'mu')),
            None if d is None else int(d),
            tuple(parse_rational(v) for v in payload.get('v', [])),
            int(payload.get('field', 1)),
        )
    except (TypeError, ValueError, AttributeError) as e:
        if isinstance(e, AlgebraError):
            raise
        raise FormatError(f"malformed parameters {payload!r}: {e}") from e


# -- elements -------------------------------------------------------------

def element_to_json(element):
    terms = []
    for m, c in element.items():
        if isinstance(element, YElement):
            term = {'chi': list(m.chi), 'x': list(m.xexp), 'w': list(m.w)}
        elif isinstance(element, TElement):
            term = {'t': list(m.t), 'x': list(m.xexp), 'w': list(m.w)}
        else:
            term = {'x': list(m.xexp), 'w': list(m.w)}
        term['coeff'] = c.to_json()
        terms.append(term)
    kind = {YElement: 'Y', TElement: 'T', HElement: 'H'}[type(element)]
    return {'kind': kind, 'params': element.algebra.params.to_json(), 'terms': terms}


def algebra_from_json(payload):
    kind = payload.get('kind', 'Y') if isinstance(payload, dict) else None
    if kind == 'Y':
        return YokonumaAlgebra(y_params_from_json(require(payload, 'params')))
    if kind == 'T':
        return TPresentation(y_params_from_json(require(payload, 'params')))
    if kind == 'H':
        return HeckeAlgebra(h_params_from_json(require(payload, 'params')))
    raise FormatError(f"unknown element kind {kind!r}")


def element_from_json(payload, algebra=None):
    """Parse an element; terms are summed and brought to normal form."""
    if algebra is None:
        algebra = algebra_from_json(payload)
    terms = require(payload, 'terms')
    if not isinstance(terms, list):
        raise FormatError("'terms' must be a list")
    total = {}
    try:
        for term in terms:
            coeff = CycScalar.from_json(require(term, 'coeff'))
            xexp = tuple(int(e) for e in require(term, 'x'))
            w = tuple(require(term, 'w'))
            if isinstance(algebra, YokonumaAlgebra):
                key = algebra.validate_monomial(require(term, "chi"), xexp, w)
            elif isinstance(algebra, TPresentation):
                t = tuple(int(k) % algebra.r for k in require(term, 't'))
                key = TMonomial(t, xexp, Permutation.checked(w))
            else:
                key = algebra.validate_monomial(xexp, w)
            coeff = algebra.scalar(coeff)
            total[key] = total[key] + coeff if key in total else coeff
    except (TypeError, ValueError) as e:
        if isinstance(e, AlgebraError):
            raise
        raise FormatError(f"malformed term: {e}") from e
    if isinstance(algebra, YokonumaAlgebra):
        return algebra.normal_form(YElement(algebra, total))
    if isinstance(algebra, TPresentation):
        return algebra.normal_form(TElement(algebra, total))
    return algebra.normal_form(HElement(algebra, total))


# -- matrices -------------------------------------------------------------

def matrix_to_json(matrix):
    return {
        'kind': 'MatrixOverH',
        'params': matrix.algebra.params.to_json(),
        'mu': list(matrix.mu),
        'entries': [
            {'row_chi': list(row), 'col_chi': list(col), 'value': element_to_json(h)}
            for (row, col), h in sorted(matrix.entries.items())
        ],
    }


def matrix_from_json(payload, algebra=None):
    if algebra is None:
        algebra = HeckeAlgebra(h_params_from_json(require(payload, 'params')))
    entries = {}
    for entry in require(payload, 'entries'):
        row = Character(int(a) for a in require(entry, 'row_chi'))
        col = Character(int(a) for a in require(entry, 'col_chi'))
        entries[(row, col)] = element_from_json(require(entry, 'value'), algebra)
    return MatrixOverH(algebra, entries)


def images_to_json(images):
    return [matrix_to_json(matrix) for _, matrix in sorted(images.items())]


def images_from_json(payload, isomorphism):
    images = {}
    for item in payload:
        algebra = isomorphism.hecke_algebra(tuple(int(p) for p in require(item, 'mu')))
        images[algebra.blocks] = matrix_from_json(item, algebra)
    return images


def scalar_matrix_to_json(matrix):
    return [[c.to_json() for c in row] for row in matrix]


def monomial_to_json(m):
    if isinstance(m, YMonomial):
        return {'chi': list(m.chi), 'x': list(m.xexp), 'w': list(m.w)}
    if isinstance(m, TMonomial):
        return {'t': list(m.t), 'x': list(m.xexp), 'w': list(m.w)}
    return {'x': list(m.xexp), 'w': list(m.w)}
