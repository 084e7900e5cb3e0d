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

"""Dense density matrices of (reduced) states."""

from typing import Iterable, Sequence, Union

import numpy as np

from qmask import linalg


class DensityMatrix:
    """An immutable dense density matrix.

    Attributes:
        dim: The width and height of the matrix.
        diagnostics: Warnings collected while the matrix was computed, for
            example that the source state was not normalized.
    """

    def __init__(self,
                 entries: np.ndarray,
                 diagnostics: Iterable[str] = ()) -> None:
        """
        Args:
            entries: A square complex matrix. It is copied.
            diagnostics: Warning strings to carry along with the matrix.

        Raises:
            ValueError: The matrix isn't square or is empty.
        """
        m = np.array(entries, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValueError(
                'Density matrix must be square and non-empty, got shape '
                '{}.'.format(m.shape))
        m.flags.writeable = False
        self._entries = m
        self.diagnostics = tuple(diagnostics)

    @staticmethod
    def maximally_mixed(dim: int) -> 'DensityMatrix':
        """The state I/dim."""
        return DensityMatrix(np.eye(dim) / dim)

    @staticmethod
    def from_pure(vector: Sequence[complex]) -> 'DensityMatrix':
        """The projector |v><v| of a dense state vector."""
        v = np.asarray(vector, dtype=np.complex128).reshape(-1)
        return DensityMatrix(np.outer(v, np.conj(v)))

    @staticmethod
    def mixture(weights: Sequence[float],
                vectors: Sequence[Sequence[complex]]) -> 'DensityMatrix':
        """sum_k weights[k] |v_k><v_k| for dense vectors v_k."""
        if len(weights) != len(vectors) or not vectors:
            raise ValueError('Need matching, non-empty weights and vectors.')
        vs = [np.asarray(v, dtype=np.complex128).reshape(-1) for v in vectors]
        result = np.zeros((len(vs[0]), len(vs[0])), dtype=np.complex128)
        for w, v in zip(weights, vs):
            result += w * np.outer(v, np.conj(v))
        return DensityMatrix(result)

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """A read-only view of the matrix."""
        return self._entries

    def trace(self) -> complex:
        return complex(np.trace(self._entries))

    def hermiticity_error(self) -> float:
        """Max-entry distance between the matrix and its adjoint."""
        return linalg.max_deviation(self._entries,
                                    np.conj(self._entries.T))

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return linalg.is_hermitian(self._entries,
                                   linalg.Tolerance(rtol=0, atol=atol))

    def _hermitian_part(self) -> np.ndarray:
        return (self._entries + np.conj(self._entries.T)) / 2

    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue of the Hermitian part."""
        return float(np.min(np.linalg.eigvalsh(self._hermitian_part())))

    def is_positive_semidefinite(self, atol: float = 1e-10) -> bool:
        return linalg.is_positive_semidefinite(
            self._hermitian_part(), linalg.Tolerance(rtol=0, atol=atol))

    def trace_norm(self) -> float:
        """Sum of the singular values."""
        return float(np.sum(np.linalg.svd(self._entries, compute_uv=False)))

    def max_deviation(self,
                      other: Union['DensityMatrix', np.ndarray]) -> float:
        """Largest absolute entrywise difference to another matrix."""
        if isinstance(other, DensityMatrix):
            other = other.entries
        return linalg.max_deviation(self._entries, other)

    def trace_norm_distance(self,
                            other: Union['DensityMatrix', np.ndarray]
                            ) -> float:
        """Sum of singular values of the difference to another matrix."""
        if isinstance(other, DensityMatrix):
            other = other.entries
        other = np.asarray(other)
        if other.shape != self._entries.shape:
            return float('inf')
        return float(np.sum(np.linalg.svd(self._entries - other,
                                          compute_uv=False)))

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self._entries.shape == other._entries.shape and
                bool(np.all(self._entries == other._entries)))

    def __ne__(self, other):
        return not self == other

    __hash__ = None  # type: ignore

    def __repr__(self):
        return 'qmask.DensityMatrix({!r})'.format(self._entries.tolist())
