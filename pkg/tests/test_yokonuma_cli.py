import json

import pytest

import yokonuma
from algebra import serialization
from algebra.yokonuma_algebra import YokonumaAlgebra, YParams


def run(capsys, *argv):
    code = yokonuma.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def element_file(tmp_path):
    algebra = YokonumaAlgebra(YParams(2, 2, 2, (0, 1)))
    element = algebra.x(2) * algebra.f(1) + algebra.E((1, 2))
    path = tmp_path / 'element.json'
    path.write_text(serialization.dumps({'element': serialization.element_to_json(element)}))
    return algebra, element, path


def test_dims(capsys):
    code, document = run(capsys, 'dims', '--max-r', '2', '--max-n', '2', '--max-d', '1')
    assert code == yokonuma.EXIT_OK
    assert document['format_version'] == 1
    assert len(document['rows']) == 4


def test_gram(capsys):
    code, document = run(capsys, 'gram', '--r', '1', '--n', '1', '--d', '2', '--v', '0', '--v', '3',
                         '--form', 'tau')
    assert code == 0
    assert document['determinant'] == {'r': 1, 'coeffs': [['-1', '1']]}
    assert document['invertible'] is True
    assert len(document['basis']) == 2


def test_semisimple_agrees(capsys):
    code, document = run(capsys, 'semisimple', '--r', '1', '--n', '1', '--d', '2', '--v', '0', '--v', '0')
    assert code == 0
    assert document['criterion'] is False
    assert document['oracle'] is False
    assert document['agree'] is True


def test_verify_iso_is_exhaustive_on_small_algebras(capsys):
    code, document = run(capsys, 'verify-iso', '--r', '2', '--n', '2', '--d', '1', '--v', '0')
    assert code == 0
    assert document['mode'] == 'exhaustive'
    assert document['status'] == 'pass'
    assert all('seconds' not in report for report in document['reports'])


def test_verify_iso_sampled_with_timing(capsys):
    code, document = run(capsys, 'verify-iso', '--r', '2', '--n', '2', '--d', '1', '--v', '0',
                         '--samples', '10', '--seed', '4', '--with-timing')
    assert code == 0
    assert document['mode'] == 'sampled'
    assert document['seed'] == 4
    assert document['reports'][0]['checked'] == 10
    assert 'seconds' in document['reports'][0]


def test_nf_and_mult(capsys, element_file):
    algebra, element, path = element_file
    code, document = run(capsys, 'nf', str(path))
    assert code == 0
    assert serialization.element_from_json(document['element']) == element
    code, document = run(capsys, 'mult', str(path), str(path))
    assert code == 0
    assert serialization.element_from_json(document['element']) == element * element


def test_phi_then_psi(capsys, element_file, tmp_path):
    algebra, element, path = element_file
    images = tmp_path / 'images.json'
    code, _ = run(capsys, 'phi', str(path), '--round-trip', '--output', str(images))
    assert code == 0
    assert json.loads(images.read_text())['round_trip'] is True
    code, document = run(capsys, 'psi', str(images), '--round-trip')
    assert code == 0
    assert document['round_trip'] is True
    assert serialization.element_from_json(document['element']) == element


@pytest.mark.parametrize('argv, code', [
    (('gram', '--r', '1', '--n', '1', '--d', '2', '--v', '0'), yokonuma.EXIT_INPUT_ERROR),
    (('gram', '--r', '2', '--n', '2'), yokonuma.EXIT_INPUT_ERROR),
    (('verify-iso', '--r', '2', '--n', '2', '--samples', '5'), yokonuma.EXIT_INPUT_ERROR),
    (('gram', '--r', '2', '--n', '2', '--d', '2', '--v', '0', '--v', '1', '--max-dim', '10'),
     yokonuma.EXIT_BOUND_EXCEEDED),
    (('verify-iso', '--r', '2', '--n', '2', '--d', '2', '--v', '0', '--v', '1', '--max-dim', '10'),
     yokonuma.EXIT_BOUND_EXCEEDED),
    (('verify-iso', '--r', '2', '--n', '2', '--max-dim', '10'), yokonuma.EXIT_BOUND_EXCEEDED),
    (('frobnicate',), yokonuma.EXIT_INPUT_ERROR),
    (('nf', '/nonexistent/element.json'), yokonuma.EXIT_INPUT_ERROR),
])
def test_exit_codes(capsys, argv, code):
    assert yokonuma.main(list(argv)) == code
    assert capsys.readouterr().out == ''


def test_bad_json_is_an_input_error(capsys, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"format_version": 1, "element": {"kind": "Y"}}')
    assert yokonuma.main(['nf', str(path)]) == yokonuma.EXIT_INPUT_ERROR
    assert 'error:' in capsys.readouterr().err


@pytest.mark.slow
def test_exhaustive_sweep_at_level_two(capsys):
    code, document = run(capsys, 'verify-iso', '--r', '2', '--n', '2', '--d', '2', '--v', '0', '--v', '1',
                         '--exhaustive')
    assert code == 0
    assert document['reports'][0]['checked'] == 32 * 32


@pytest.mark.slow
def test_semisimple_at_level_two(capsys):
    code, document = run(capsys, 'semisimple', '--r', '2', '--n', '2', '--d', '2', '--v', '0', '--v', '1')
    assert code == 0
    assert (document['criterion'], document['oracle'], document['agree']) == (False, False, True)
