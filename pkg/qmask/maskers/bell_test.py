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
import itertools

import numpy as np
import pytest

import qmask
from qmask.maskers import config
from qmask.testing import random_unit_vector


@pytest.fixture(autouse=True)
def default_cap(monkeypatch):
    monkeypatch.delenv(config.ENV_CAP_D, raising=False)


def test_qubit_images():
    m = qmask.bell_masker(2)
    assert m.scheme == 'bell'
    assert m.parties == 4
    assert m.local_dims == (2, 2, 2, 2)
    plus = qmask.make_state([2] * 4, [
        ((0, 0, 0, 0), 0.5), ((0, 0, 1, 1), 0.5),
        ((1, 1, 0, 0), 0.5), ((1, 1, 1, 1), 0.5)])
    minus = qmask.make_state([2] * 4, [
        ((0, 0, 0, 0), 0.5), ((0, 0, 1, 1), -0.5),
        ((1, 1, 0, 0), -0.5), ((1, 1, 1, 1), 0.5)])
    assert qmask.max_amplitude_deviation(m.images[0], plus) < 1e-15
    assert qmask.max_amplitude_deviation(m.images[1], minus) < 1e-15
    assert abs(qmask.inner(m.images[0], m.images[1])) < 1e-15


def test_qubit_encoding_is_exact():
    m = qmask.bell_masker(2)
    prng = np.random.RandomState(31)
    for _ in range(50):
        a0, a1 = random_unit_vector(2, prng)
        p, q = (a0 + a1) / 2, (a0 - a1) / 2
        expected = qmask.make_state([2] * 4, [
            ((0, 0, 0, 0), p), ((1, 1, 1, 1), p),
            ((0, 0, 1, 1), q), ((1, 1, 0, 0), q)])
        actual = qmask.encode(m, qmask.InputState([a0, a1]))
        assert qmask.max_amplitude_deviation(actual, expected) <= 1e-14
        assert set(actual.support()) <= {
            (0, 0, 0, 0), (1, 1, 1, 1), (0, 0, 1, 1), (1, 1, 0, 0)}


def test_qutrit_images_are_products_of_bell_states():
    m = qmask.bell_masker(3)
    w = cmath.exp(2j * cmath.pi / 3)
    assert m.parties == 6
    for l, image in enumerate(m.images):
        assert image.support_size() == 27
        for digits in itertools.product(range(3), repeat=3):
            index = tuple(j for j in digits for _ in range(2))
            expected = w**(l * sum(digits)) / 3**1.5
            assert abs(image.amplitude(index) - expected) < 1e-14


def test_qutrit_coefficient_classes():
    m = qmask.bell_masker(3)
    w = cmath.exp(2j * cmath.pi / 3)
    prng = np.random.RandomState(32)
    for _ in range(20):
        alpha = random_unit_vector(3, prng)
        encoded = qmask.encode(m, qmask.InputState(alpha))
        for digits in itertools.product(range(3), repeat=3):
            t = sum(digits) % 3
            expected = (alpha[0] + w**t * alpha[1] +
                        w**(2 * t) * alpha[2]) / 3 / np.sqrt(3)
            index = tuple(j for j in digits for _ in range(2))
            assert abs(encoded.amplitude(index) - expected) <= 1e-13
            assert abs(qmask.bell_coefficient(alpha, digits) -
                       expected) <= 1e-13
        assert encoded.support_size() <= 27


@pytest.mark.parametrize('d', [2, 3, 4, 5])
def test_bell_coefficient_is_a_fourier_component(d):
    f = qmask.linalg.fourier_matrix(d)
    prng = np.random.RandomState(d)
    alpha = random_unit_vector(d, prng)
    for t in range(d):
        digits = [t] + [0] * (d - 1)
        expected = f[t].dot(alpha) * d**(-(d - 1) / 2)
        assert abs(qmask.bell_coefficient(alpha, digits) - expected) <= 1e-13


def test_first_qutrit_amplitude_example():
    # |11>|22>|11> counting symbols from 1.
    alpha = [0.6, 0.0, 0.8j]
    w = cmath.exp(2j * cmath.pi / 3)
    encoded = qmask.encode(qmask.bell_masker(3), qmask.InputState(alpha))
    expected = (alpha[0] + w * alpha[1] + w**2 * alpha[2]) / 3 / np.sqrt(3)
    assert abs(encoded.amplitude((0, 0, 1, 1, 0, 0)) - expected) < 1e-14


@pytest.mark.parametrize('d', [2, 3, 4, 5])
def test_support_counts_and_magnitudes(d):
    m = qmask.bell_masker(d)
    assert m.parties == 2 * d
    assert m.local_dims == (d,) * (2 * d)
    for image in m.images:
        assert image.support_size() == d**d
        np.testing.assert_allclose(np.abs(image.amplitudes_array()),
                                   d**(-d / 2), atol=1e-15)
        assert image.is_normalized()


def test_qubit_marginals_are_maximally_mixed():
    m = qmask.bell_masker(2)
    x = qmask.InputState([np.sqrt(0.5), 1j * np.sqrt(0.5)])
    encoded = qmask.encode(m, x)
    for j in range(4):
        assert qmask.partial_trace(encoded, j).max_deviation(
            np.eye(2) / 2) < 1e-12


def test_cap():
    with pytest.raises(qmask.ResourceCapError):
        _ = qmask.bell_masker(7)
    with pytest.raises(qmask.ResourceCapError):
        _ = qmask.bell_masker(3, cap=2)
    assert qmask.bell_masker(3, cap=3).input_dim == 3


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(config.ENV_CAP_D, '2')
    with pytest.raises(qmask.ResourceCapError):
        _ = qmask.bell_masker(3)
    assert qmask.bell_masker(2).input_dim == 2


def test_invalid_dimension():
    with pytest.raises(ValueError, match='d >= 2'):
        _ = qmask.bell_masker(1)
