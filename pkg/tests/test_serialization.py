import json

import pytest

from algebra import isomorphism, serialization
from algebra.errors import FormatError, IndexOutOfRange, NotInYoungSubgroup
from algebra.hecke_algebra import HeckeAlgebra, HParams
from algebra.scalar_field import zeta
from algebra.t_presentation import TPresentation
from algebra.yokonuma_algebra import YokonumaAlgebra, YParams


@pytest.fixture(scope='module')
def algebra():
    return YokonumaAlgebra(YParams(3, 2, 2, (0, 1)))


def test_documents_carry_a_version():
    document = json.loads(serialization.dumps({'rows': []}))
    assert document['format_version'] == serialization.FORMAT_VERSION
    assert serialization.loads(serialization.dumps({'a': 1}))['a'] == 1
    with pytest.raises(FormatError):
        serialization.loads('{"format_version": 2}')
    with pytest.raises(FormatError):
        serialization.loads('[1, 2]')
    with pytest.raises(FormatError):
        serialization.loads('{not json')


def test_elements_survive_json(algebra):
    element = algebra.x(2) * algebra.f(1) + algebra.t(1).scaled(zeta(3, 2))
    payload = json.loads(json.dumps(serialization.element_to_json(element)))
    assert payload['kind'] == 'Y'
    assert serialization.element_from_json(payload) == element

    hecke = HeckeAlgebra(HParams((1, 2), 2, (0, 1), field=3))
    h = hecke.x(2) * hecke.s(2)
    assert serialization.element_from_json(serialization.element_to_json(h)) == h

    t = TPresentation(algebra.params)
    te = t.from_idempotent_basis(element)
    assert serialization.element_from_json(serialization.element_to_json(te)) == te


def test_parsed_elements_are_normalized(algebra):
    payload = {
        'kind': 'Y',
        'params': algebra.params.to_json(),
        'terms': [
            {'chi': [1, 2], 'x': [2, 0], 'w': [1, 2], 'coeff': {'r': 1, 'coeffs': [["1", "1"]]}},
            {'chi': [1, 2], 'x': [1, 0], 'w': [1, 2], 'coeff': {'r': 1, 'coeffs': [["-1", "1"]]}},
        ],
    }
    # x_1^2 = x_1 when v = (0, 1)
    assert serialization.element_from_json(payload) == algebra.zero()


def test_malformed_elements(algebra):
    params = algebra.params.to_json()
    with pytest.raises(FormatError):
        serialization.element_from_json({'kind': 'Q', 'params': params, 'terms': []})
    with pytest.raises(FormatError):
        serialization.element_from_json({'kind': 'Y', 'params': params})
    with pytest.raises(IndexOutOfRange):
        serialization.element_from_json({'kind': 'Y', 'params': params, 'terms': [
            {'chi': [1, 4], 'x': [0, 0], 'w': [1, 2], 'coeff': {'r': 1, 'coeffs': [["1", "1"]]}},
        ]})
    with pytest.raises(NotInYoungSubgroup):
        serialization.element_from_json({'kind': 'H', 'params': {'mu': [1, 1], 'd': None}, 'terms': [
            {'x': [0, 0], 'w': [2, 1], 'coeff': {'r': 1, 'coeffs': [["1", "1"]]}},
        ]})
    with pytest.raises(FormatError):
        serialization.y_params_from_json({'r': 'two', 'n': 2})


def test_block_images_survive_json(algebra):
    iso = isomorphism.context(algebra.params)
    element = algebra.x(1) * algebra.f(1) * algebra.t(2)
    images = iso.phi_full(element)
    payload = json.loads(json.dumps(serialization.images_to_json(images)))
    assert serialization.images_from_json(payload, iso) == images


def test_reports_hide_timing_by_default():
    report = serialization.Report('demo', {'r': 1}, checked=3, seconds=0.25)
    assert 'seconds' not in report.to_json()
    assert report.to_json(with_timing=True)['seconds'] == 0.25
    assert report.status == 'pass'
    failing = serialization.Report('demo', {}, witnesses=[{'i': 0}])
    assert failing.to_json()['status'] == 'fail'
