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

"""Utility methods for combining and building matrices."""

import cmath

import numpy as np


def kron(*matrices: np.ndarray) -> np.ndarray:
    """Computes the kronecker product of a sequence of matrices.

    A *args version of lambda args: functools.reduce(np.kron, args).

    Args:
        *matrices: The matrices (or vectors) to combine with the kronecker
            product.

    Returns:
        The resulting matrix.
    """
    product = np.eye(1)
    for m in matrices:
        product = np.kron(product, m)
    return np.array(product)


def root_of_unity_power(d: int, exponent: int) -> complex:
    """Returns omega**exponent for the principal d-th root of unity.

    The exponent is reduced mod d before exponentiating, so that large
    exponents don't accumulate phase error.
    """
    if d < 1:
        raise ValueError('Root of unity order must be positive: {}'.format(d))
    e = exponent % d
    if e == 0:
        return 1 + 0j
    if 4 * e == d:
        return 1j
    if 2 * e == d:
        return -1 + 0j
    if 4 * e == 3 * d:
        return -1j
    return cmath.exp(2j * cmath.pi * e / d)


def fourier_matrix(d: int) -> np.ndarray:
    """The unitary discrete Fourier transform matrix of size d.

    Entry (j, k) is omega**(j*k) / sqrt(d) with omega = exp(2 pi i / d).
    """
    result = np.empty((d, d), dtype=np.complex128)
    for j in range(d):
        for k in range(d):
            result[j, k] = root_of_unity_power(d, j * k)
    return result / np.sqrt(d)
