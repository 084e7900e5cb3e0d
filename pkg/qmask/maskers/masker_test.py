# Copyright 2018 The qmask Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
import json
import os

import numpy as np
import pytest

import qmask
from qmask.testing import EqualsTester, random_unit_vector

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')

KLEIN_PAIR = qmask.MOLSPair.certify(
    qmask.LatinSquare([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]),
    qmask.LatinSquare([[1, 2, 3, 4], [4, 3, 2, 1], [2, 1, 4, 3], [3, 4, 1, 2]]))


def _all_maskers():
    return [qmask.bell_masker(2), qmask.bell_masker(3), qmask.shor_masker(),
            qmask.mols_masker(qmask.cyclic_pair(3)),
            qmask.embedded_masker(2)]


def test_input_state_requires_normalization():
    x = qmask.InputState([0.6, 0.8j])
    assert x.dim == 2
    assert x.coeffs.tolist() == [0.6, 0.8j]
    with pytest.raises(ValueError, match='not normalized'):
        _ = qmask.InputState([1, 1])
    with pytest.raises(ValueError, match='at least one'):
        _ = qmask.InputState([])
    y = qmask.InputState([1, 1], check_normalized=False)
    assert y.coeffs.tolist() == [1, 1]
    with pytest.raises(ValueError):
        x.coeffs[0] = 1


def test_input_state_from_coefficients():
    x = qmask.InputState.from_coefficients([0.6, 0.8 * (1 + 1e-7)])
    assert abs(np.linalg.norm(x.coeffs) - 1) < 1e-15
    with pytest.raises(ValueError, match='further than'):
        _ = qmask.InputState.from_coefficients([0.6, 0.9])
    with pytest.raises(ValueError, match='further than'):
        _ = qmask.InputState.from_coefficients([1, 1e-3],
                                               renormalize_tol=1e-9)
    assert (qmask.InputState.from_coefficients([1, 0]) ==
            qmask.InputState([1, 0]))


def test_input_state_basis_and_equality():
    assert qmask.InputState.basis(3, 1).coeffs.tolist() == [0, 1, 0]
    with pytest.raises(ValueError, match='out of range'):
        _ = qmask.InputState.basis(3, 3)
    eq = EqualsTester()
    eq.add_equality_group(qmask.InputState([1, 0]),
                          qmask.InputState.basis(2, 0))
    eq.add_equality_group(qmask.InputState([0, 1]))
    eq.add_equality_group(qmask.InputState([1, 0, 0]))
    assert repr(qmask.InputState([1, 0])) == (
        'qmask.InputState([(1+0j), 0j])')


def test_masker_rejects_inconsistent_images():
    a = qmask.make_state([2], [((0,), 1)])
    b = qmask.make_state([2], [((1,), 1)])
    c = qmask.make_state([3], [((1,), 1)])
    with pytest.raises(ValueError, match='Expected 2 images, got 1'):
        _ = qmask.Masker('test', 2, [a])
    with pytest.raises(qmask.DimensionMismatchError):
        _ = qmask.Masker('test', 2, [a, c])
    with pytest.raises(ValueError, match='not orthonormal'):
        _ = qmask.Masker('test', 2, [a, a])
    with pytest.raises(ValueError, match='not orthonormal'):
        _ = qmask.Masker('test', 2, [a, b.scaled(2)])
    with pytest.raises(ValueError, match='marginals'):
        _ = qmask.Masker('test', 2, [a, b],
                         expected_marginals=[
                             qmask.DensityMatrix.maximally_mixed(3)])


def test_masker_fields():
    a = qmask.make_state([2, 3], [((0, 0), 1)])
    b = qmask.make_state([2, 3], [((1, 2), 1j)])
    m = qmask.Masker('test', 2, [a, b])
    assert m.parties == 2
    assert m.local_dims == (2, 3)
    assert m.images == (a, b)
    assert m.expected_marginals == (qmask.DensityMatrix.maximally_mixed(2),
                                    qmask.DensityMatrix.maximally_mixed(3))
    np.testing.assert_allclose(m.gram_matrix(), np.eye(2), atol=0)
    assert m.basis_input(1) == qmask.InputState([0, 1])
    assert repr(m) == ("qmask.Masker(scheme='test', d=2, parties=2, "
                       "local_dims=(2, 3))")


def test_unvalidated_masker_keeps_duplicate_images():
    a = qmask.make_state([2], [((0,), 1)])
    m = qmask.Masker('broken', 2, [a, a], validate=False)
    np.testing.assert_allclose(m.gram_matrix(), np.ones((2, 2)), atol=0)


def test_gram_is_identity():
    for m in _all_maskers():
        np.testing.assert_allclose(m.gram_matrix(), np.eye(m.input_dim),
                                   atol=1e-12)


def test_encode_basis_inputs_give_images():
    for m in _all_maskers():
        for j in range(m.input_dim):
            assert qmask.max_amplitude_deviation(
                qmask.encode(m, m.basis_input(j)), m.images[j]) == 0


def test_encode_is_an_isometry():
    prng = np.random.RandomState(21)
    for m in _all_maskers():
        for _ in range(10):
            x = qmask.InputState(random_unit_vector(m.input_dim, prng))
            assert abs(qmask.encode(m, x).norm() - 1) < 1e-10


def test_encode_is_linear():
    prng = np.random.RandomState(22)
    for m in _all_maskers():
        d = m.input_dim
        for _ in range(5):
            x = prng.randn(d) + 1j * prng.randn(d)
            y = prng.randn(d) + 1j * prng.randn(d)
            a, b = complex(prng.randn(), prng.randn()), 0.5 - 2j
            combined = qmask.encode(
                m, qmask.InputState(a * x + b * y, check_normalized=False))
            separate = qmask.linear_combination(
                [a, b],
                [qmask.encode(m, qmask.InputState(x, check_normalized=False)),
                 qmask.encode(m, qmask.InputState(y, check_normalized=False))])
            assert qmask.max_amplitude_deviation(combined, separate) < 1e-12


def test_encode_dimension_mismatch():
    with pytest.raises(ValueError, match='3-dimensional input'):
        _ = qmask.encode(qmask.shor_masker(), qmask.InputState.basis(3, 0))


def test_manifest():
    m = qmask.shor_masker()
    data = json.loads(qmask.masker_to_json(m))
    assert list(data.keys()) == ['scheme', 'd', 'parties', 'local_dims',
                                 'images']
    assert data['scheme'] == 'shor'
    assert data['d'] == 2
    assert data['parties'] == 9
    assert data['local_dims'] == [2] * 9
    assert len(data['images']) == 2
    assert qmask.state_from_json_dict(data['images'][1]) == m.images[1]
    assert data['images'][0]['amps'][0]['idx'] == [1] * 9
    assert qmask.masker_to_json(m).endswith('}\n')
    assert qmask.masker_to_json(m) == qmask.masker_to_json(
        qmask.shor_masker())


def test_bell_coefficient():
    w = cmath.exp(2j * cmath.pi / 3)
    alpha = [0.5, 0.5j, np.sqrt(0.5)]
    expected = (alpha[0] + w * alpha[1] + w**2 * alpha[2]) / 3 / np.sqrt(3)
    assert abs(qmask.bell_coefficient(alpha, [1, 0, 0]) - expected) < 1e-15
    assert abs(qmask.bell_coefficient(alpha, [2, 1, 1]) - expected) < 1e-15
    assert abs(qmask.bell_coefficient([0.6, 0.8], [0, 0]) - 0.7) < 1e-15
    assert abs(qmask.bell_coefficient([0.6, 0.8], [1, 0]) + 0.1) < 1e-15
    with pytest.raises(ValueError, match='Expected 2 digits'):
        _ = qmask.bell_coefficient([0.6, 0.8], [0])


def _golden(name):
    with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as f:
        return f.read()


def _assert_same_json(actual, expected):
    if isinstance(expected, float):
        assert isinstance(actual, float)
        assert abs(actual - expected) <= 1e-15
    elif isinstance(expected, dict):
        assert list(actual.keys()) == list(expected.keys())
        for key in expected:
            _assert_same_json(actual[key], expected[key])
    elif isinstance(expected, list):
        assert len(actual) == len(expected)
        for a, e in zip(actual, expected):
            _assert_same_json(a, e)
    else:
        assert (actual, type(actual)) == (expected, type(expected))


def _assert_matches_golden(text, name):
    """Line for line, except that amplitudes may differ in the last place."""
    golden = _golden(name)
    actual_lines = text.split('\n')
    golden_lines = golden.split('\n')
    assert len(actual_lines) == len(golden_lines)
    for a, g in zip(actual_lines, golden_lines):
        if a != g:
            assert a.split(':')[0] == g.split(':')[0]
            assert a.strip().startswith(('"re":', '"im":'))
    _assert_same_json(json.loads(text), json.loads(golden))


@pytest.mark.parametrize('name,make', [
    ('bell_2.json', lambda: qmask.bell_masker(2)),
    ('shor.json', qmask.shor_masker),
    ('mols_klein_4.json', lambda: qmask.mols_masker(KLEIN_PAIR)),
    ('embedded_2.json', lambda: qmask.embedded_masker(2)),
])
def test_manifest_matches_golden_file(name, make):
    text = qmask.masker_to_json(make())
    _assert_matches_golden(text, name)
    assert '-0.0' not in text


def test_exact_manifest_is_byte_identical():
    # Amplitudes of 1/2 and 0 are exact in binary.
    assert qmask.masker_to_json(qmask.mols_masker(KLEIN_PAIR)) == _golden(
        'mols_klein_4.json')


def test_encoded_state_dump_is_byte_identical():
    m = qmask.mols_masker(KLEIN_PAIR)
    state = qmask.encode(m, qmask.InputState([0.6, 0.8, 0, 0]))
    text = qmask.state_to_json(state)
    assert text == _golden('mols_klein_4_encoded.json')
    assert qmask.state_from_json(text) == state
