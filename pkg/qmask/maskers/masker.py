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

"""Masking schemes as families of orthonormal image states."""

import json
import logging
from typing import Any, Dict, Iterable, Optional, Sequence

import numpy as np

from qmask import linalg, states

logger = logging.getLogger(__name__)

NORMALIZATION_ATOL = 1e-10

# Images must be orthonormal to this precision.
IMAGE_ATOL = 1e-12

SCHEMES = ('bell', 'shor', 'mols', 'embedded')


class InputState:
    """The coefficients alpha_0..alpha_{d-1} of a state of the input system.

    Attributes:
        dim: The input dimension d.
    """

    def __init__(self,
                 coeffs: Iterable[complex],
                 check_normalized: bool = True) -> None:
        """
        Args:
            coeffs: The amplitudes on the computational basis.
            check_normalized: Require the squared norm to be within 1e-10 of
                1. Turning this off is only meant for exercising linearity.

        Raises:
            ValueError: There are no coefficients, or they aren't normalized.
        """
        c = np.array(list(coeffs), dtype=np.complex128)
        if c.ndim != 1 or len(c) == 0:
            raise ValueError('An input state needs at least one coefficient.')
        if check_normalized:
            norm_squared = float(np.sum(np.abs(c)**2))
            if abs(norm_squared - 1) > NORMALIZATION_ATOL:
                raise ValueError(
                    'Input coefficients are not normalized: squared norm is '
                    '{!r}.'.format(norm_squared))
        c.flags.writeable = False
        self._coeffs = c

    @staticmethod
    def from_coefficients(coeffs: Iterable[complex],
                          renormalize_tol: float = 1e-6) -> 'InputState':
        """Builds a normalized input, rescaling nearly normalized coefficients.

        Args:
            coeffs: The amplitudes.
            renormalize_tol: The largest deviation of the norm from 1 that is
                silently corrected (with a logged warning).

        Raises:
            ValueError: The norm is further than renormalize_tol from 1.
        """
        c = np.array(list(coeffs), dtype=np.complex128)
        norm = float(np.linalg.norm(c))
        if abs(norm - 1) > renormalize_tol:
            raise ValueError(
                'Coefficients have norm {!r}, further than {!r} from 1.'.format(
                    norm, renormalize_tol))
        if abs(norm**2 - 1) > NORMALIZATION_ATOL:
            logger.warning('Renormalizing input coefficients of norm %r.',
                           norm)
        return InputState(c / norm)

    @staticmethod
    def basis(d: int, j: int) -> 'InputState':
        """The computational basis state |j> of dimension d."""
        if not 0 <= j < d:
            raise ValueError('Basis index {} out of range for dimension '
                             '{}.'.format(j, d))
        c = np.zeros(d, dtype=np.complex128)
        c[j] = 1
        return InputState(c)

    @property
    def dim(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> np.ndarray:
        """A read-only view of the coefficients."""
        return self._coeffs

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((InputState, tuple(self._coeffs.tolist())))

    def __repr__(self):
        return 'qmask.InputState({!r})'.format(self._coeffs.tolist())


class Masker:
    """An isometric encoding |j> -> |Phi_j> of a d-level system.

    Attributes:
        scheme: Which construction produced the masker: one of 'bell',
            'shor', 'mols' or 'embedded'.
        input_dim: The dimension d of the input system.
        images: The d image states, one per input basis state.
        local_dims: The dimension of each party of the images.
        expected_marginals: The reduced state every party should have for
            every input.
    """

    def __init__(self,
                 scheme: str,
                 input_dim: int,
                 images: Sequence[states.SparseState],
                 expected_marginals: Optional[
                     Sequence[states.DensityMatrix]] = None,
                 validate: bool = True) -> None:
        """
        Args:
            scheme: The scheme tag.
            input_dim: The input dimension d.
            images: The d image states, all on the same parties.
            expected_marginals: One reduced state per party. Defaults to the
                maximally mixed state of each party.
            validate: Check that the images are orthonormal. Only broken
                maskers built on purpose skip this.

        Raises:
            ValueError: The images don't match input_dim or each other, or
                (when validating) they are not orthonormal.
        """
        images = list(images)
        if input_dim < 1 or len(images) != input_dim:
            raise ValueError('Expected {} images, got {}.'.format(
                input_dim, len(images)))
        local_dims = images[0].dims
        for image in images:
            if image.dims != local_dims:
                raise states.DimensionMismatchError(
                    'Images have different dims {!r} and {!r}.'.format(
                        local_dims, image.dims))
        if expected_marginals is None:
            expected_marginals = [states.DensityMatrix.maximally_mixed(d)
                                  for d in local_dims]
        expected_marginals = list(expected_marginals)
        if [m.dim for m in expected_marginals] != list(local_dims):
            raise ValueError('Expected marginals do not match dims {!r}.'
                             .format(local_dims))

        self.scheme = scheme
        self.input_dim = input_dim
        self.images = tuple(images)
        self.local_dims = local_dims
        self.expected_marginals = tuple(expected_marginals)

        if validate:
            deviation = linalg.max_deviation(self.gram_matrix(),
                                             np.eye(input_dim))
            if deviation > IMAGE_ATOL:
                raise ValueError(
                    'Images of the {} masker are not orthonormal: Gram '
                    'deviation {!r}.'.format(scheme, deviation))

    @property
    def parties(self) -> int:
        return len(self.local_dims)

    def gram_matrix(self) -> np.ndarray:
        """The matrix of inner products <Phi_j|Phi_k>."""
        d = self.input_dim
        gram = np.empty((d, d), dtype=np.complex128)
        for j in range(d):
            for k in range(j, d):
                gram[j, k] = states.inner(self.images[j], self.images[k])
                gram[k, j] = np.conj(gram[j, k])
        return gram

    def basis_input(self, j: int) -> InputState:
        return InputState.basis(self.input_dim, j)

    def manifest(self) -> Dict[str, Any]:
        """The masker manifest structure, images in the state dump format."""
        return {
            'scheme': self.scheme,
            'd': self.input_dim,
            'parties': self.parties,
            'local_dims': list(self.local_dims),
            'images': [states.state_to_json_dict(image)
                       for image in self.images],
        }

    def __repr__(self):
        return ('qmask.Masker(scheme={!r}, d={!r}, parties={!r}, '
                'local_dims={!r})'.format(self.scheme, self.input_dim,
                                          self.parties, self.local_dims))


def masker_to_json(masker: Masker) -> str:
    return json.dumps(masker.manifest(), indent=2) + '\n'


def encode(masker: Masker, x: InputState) -> states.SparseState:
    """Returns sum_l alpha_l |Phi_l>, the encoding of x.

    Raises:
        ValueError: x has the wrong dimension.
    """
    if x.dim != masker.input_dim:
        raise ValueError(
            'Cannot encode a {}-dimensional input with a masker for dimension '
            '{}.'.format(x.dim, masker.input_dim))
    return states.linear_combination(list(x.coeffs), masker.images)


def bell_coefficient(alpha: Sequence[complex],
                     digits: Sequence[int]) -> complex:
    """The closed-form bell masker amplitude on |j_0 j_0>...|j_{d-1} j_{d-1}>.

    Equals d**(-d/2) sum_k omega**((j_0 + ... + j_{d-1}) k) alpha_k, which
    depends on the digits only through their sum mod d.

    Args:
        alpha: The input coefficients, d of them.
        digits: The d digits j_0..j_{d-1}, each in 0..d-1.

    Raises:
        ValueError: The number of digits doesn't match d.
    """
    d = len(alpha)
    if len(digits) != d:
        raise ValueError('Expected {} digits, got {}.'.format(d, len(digits)))
    t = sum(int(j) for j in digits)
    total = sum(linalg.root_of_unity_power(d, t * k) * complex(a)
                for k, a in enumerate(alpha))
    return total * d**(-d / 2)

