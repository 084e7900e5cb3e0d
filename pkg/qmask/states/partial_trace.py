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

"""Reduced states of sparse pure states."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from qmask.states.density_matrix import DensityMatrix
from qmask.states.sparse_state import SparseState

logger = logging.getLogger(__name__)

NORMALIZATION_ATOL = 1e-10


def _check_keep(state: SparseState, keep: Sequence[int]) -> List[int]:
    keep = [int(e) for e in keep]
    if not keep:
        raise ValueError('Must keep at least one party.')
    for a, b in zip(keep, keep[1:]):
        if a >= b:
            raise ValueError(
                'Kept parties must be strictly increasing, got {!r}.'.format(
                    keep))
    if keep[0] < 0 or keep[-1] >= state.num_parties:
        raise ValueError(
            'Kept parties {!r} out of range for a {}-party state.'.format(
                keep, state.num_parties))
    return keep


def _normalization_notes(state: SparseState) -> List[str]:
    norm_squared = state.norm()**2
    if abs(norm_squared - 1) <= NORMALIZATION_ATOL:
        return []
    note = 'state not normalized: norm squared is {!r}'.format(norm_squared)
    logger.warning('Partial trace of a non-normalized state (%s).', note)
    return [note]


def _diagnostic_notes(rho: np.ndarray) -> List[str]:
    notes = []
    matrix = DensityMatrix(rho)
    if not matrix.is_hermitian(1e-12):
        notes.append('not hermitian: max asymmetry {!r}'.format(
            matrix.hermiticity_error()))
    min_eig = matrix.min_eigenvalue()
    if min_eig < -1e-10:
        notes.append('not positive: min eigenvalue {!r}'.format(min_eig))
    trace_norm = matrix.trace_norm()
    if abs(trace_norm - 1) > NORMALIZATION_ATOL:
        notes.append('trace norm {!r}'.format(trace_norm))
    return notes


def partial_trace_general(state: SparseState,
                          keep: Sequence[int],
                          diagnostic: bool = False) -> DensityMatrix:
    """Computes the joint reduced state of a set of parties.

    Entries whose multi-indices agree on every traced-out party are grouped,
    and each group contributes the outer product of its amplitudes. Nothing
    is assumed about orthogonality of the traced-out factors.

    Args:
        state: The pure state. Should be normalized; if it is not, the result
            is still returned (its trace is the squared norm) and a note is
            added to its diagnostics.
        keep: Strictly increasing party indices to keep. Row and column
            indices of the result are the mixed-radix flattening of the kept
            digits, first kept party most significant.
        diagnostic: Also check hermiticity, positivity and unit trace norm
            of the result, recording any violation in the diagnostics.

    Returns:
        The reduced density matrix on the kept parties.

    Raises:
        ValueError: keep is empty, unordered, or out of range.
    """
    keep = _check_keep(state, keep)
    traced = [p for p in range(state.num_parties) if p not in keep]
    kept_dims = [state.dims[p] for p in keep]
    dim = int(np.prod(kept_dims))

    notes = _normalization_notes(state)

    indices = state.indices_array()
    values = state.amplitudes_array()
    if len(values) == 0:
        rho = np.zeros((dim, dim), dtype=np.complex128)
    else:
        rows = np.ravel_multi_index(indices[:, keep].T, kept_dims)
        if traced:
            _, groups = np.unique(indices[:, traced], axis=0,
                                  return_inverse=True)
            groups = np.asarray(groups).reshape(-1)
            num_groups = int(groups.max()) + 1
        else:
            groups = np.zeros(len(values), dtype=np.int64)
            num_groups = 1
        # Within a group every row index is distinct.
        block = np.zeros((num_groups, dim), dtype=np.complex128)
        block[groups, rows] = values
        rho = block.T.dot(np.conj(block))

    if diagnostic:
        notes.extend(_diagnostic_notes(rho))
    return DensityMatrix(rho, diagnostics=notes)


def partial_trace(state: SparseState,
                  keep: int,
                  diagnostic: bool = False) -> DensityMatrix:
    """Computes the reduced state of a single party.

    Args:
        state: The pure state.
        keep: The index of the party to keep.
        diagnostic: See partial_trace_general.

    Returns:
        The reduced density matrix of the party.

    Raises:
        ValueError: keep is out of range.
    """
    return partial_trace_general(state, [keep], diagnostic=diagnostic)


def lemma_a_trace(coeffs: Sequence[complex],
                  local_states: Sequence[Sequence[complex]],
                  complement_dim: Optional[int] = None) -> DensityMatrix:
    """The reduced state of sum_k c_k |psi_k>|mu_k> with orthonormal mu_k.

    When the complementary factors mu_k are orthonormal, the cross terms of
    the partial trace vanish and the reduced state is
    sum_k |c_k|**2 |psi_k><psi_k|. This closed form is independent of the
    general partial trace and serves as an oracle for it.

    Args:
        coeffs: The coefficients c_k.
        local_states: Dense vectors psi_k of the kept party, all the same
            length.
        complement_dim: If given, the dimension of the traced-out system,
            which bounds how many orthonormal mu_k can exist.

    Returns:
        The reduced density matrix.

    Raises:
        ValueError: The lengths don't match, the local states have different
            sizes, or there are more terms than the complement allows.
    """
    if len(coeffs) != len(local_states):
        raise ValueError('Got {} coefficients for {} local states.'.format(
            len(coeffs), len(local_states)))
    if not coeffs:
        raise ValueError('Need at least one term.')
    if complement_dim is not None and len(coeffs) > complement_dim:
        raise ValueError(
            '{} orthonormal complementary states cannot exist in dimension '
            '{}.'.format(len(coeffs), complement_dim))
    vectors = [np.asarray(v, dtype=np.complex128).reshape(-1)
               for v in local_states]
    if len({len(v) for v in vectors}) != 1:
        raise ValueError('Local states must all have the same dimension.')

    weights = [abs(complex(c))**2 for c in coeffs]
    notes = []
    if abs(sum(weights) - 1) > NORMALIZATION_ATOL:
        notes.append('coefficients not normalized: sum of squares is '
                     '{!r}'.format(sum(weights)))
        logger.warning('Lemma trace with %s.', notes[-1])
    result = DensityMatrix.mixture(weights, vectors)
    return DensityMatrix(result.entries, diagnostics=notes)


def reduce_party(rho: DensityMatrix,
                 dims: Sequence[int],
                 keep: Sequence[int]) -> DensityMatrix:
    """Partial trace of a dense joint density matrix.

    Args:
        rho: A density matrix on parties with the given dims, in mixed-radix
            order.
        dims: The dimension of each party of rho.
        keep: Strictly increasing indices of the parties to keep.

    Returns:
        The reduced density matrix on the kept parties.

    Raises:
        ValueError: The dims don't match rho, or keep is invalid.
    """
    dims = [int(e) for e in dims]
    n = len(dims)
    if int(np.prod(dims)) != rho.dim:
        raise ValueError('Dims {!r} do not match a {}x{} matrix.'.format(
            dims, rho.dim, rho.dim))
    keep = [int(e) for e in keep]
    if (not keep or sorted(set(keep)) != keep or keep[0] < 0 or
            keep[-1] >= n):
        raise ValueError('Invalid kept parties {!r} for {} parties.'.format(
            keep, n))
    tensor = np.array(rho.entries).reshape(dims + dims)
    # Trace out from the highest party down so lower axis numbers stay put.
    remaining = n
    for p in reversed(range(n)):
        if p in keep:
            continue
        tensor = np.trace(tensor, axis1=p, axis2=p + remaining)
        remaining -= 1
    kept_dim = int(np.prod([dims[p] for p in keep]))
    return DensityMatrix(tensor.reshape(kept_dim, kept_dim))
