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

"""Sparse multipartite pure states.

A SparseState stores only the nonzero amplitudes of a pure state on a
multipartite system, keyed by the basis multi-index (one 0-based digit per
party). Masked states have at most d**d nonzero amplitudes inside Hilbert
spaces of dimension up to d**(2d), so a dense vector is never built unless
explicitly requested.
"""

import json
from typing import (Any, Dict, Iterable, Iterator, List, Mapping, Sequence,
                    Tuple)

import numpy as np
from sortedcontainers import SortedDict

MultiIndex = Tuple[int, ...]

PRUNE_THRESHOLD = 1e-14

# Refuse to densify anything bigger than this many amplitudes.
MAX_DENSE_SIZE = 2**22


class DimensionMismatchError(ValueError):
    """A multi-index or state does not fit the dimensions it is used with."""


def _check_dims(dims: Iterable[int]) -> Tuple[int, ...]:
    result = tuple(int(e) for e in dims)
    if not result:
        raise ValueError('A state needs at least one party.')
    for d in result:
        if d < 1:
            raise ValueError(
                'Party dimensions must be positive, got {!r}.'.format(result))
    return result


def _check_index(dims: Tuple[int, ...], index: Sequence[int]) -> MultiIndex:
    key = tuple(int(e) for e in index)
    if len(key) != len(dims):
        raise DimensionMismatchError(
            'Index {!r} has {} digits but the state has {} parties.'.format(
                key, len(key), len(dims)))
    for digit, d in zip(key, dims):
        if not 0 <= digit < d:
            raise DimensionMismatchError(
                'Index {!r} is out of range for dims {!r}.'.format(key, dims))
    return key


class SparseState:
    """An immutable pure state on a multipartite system.

    Amplitudes whose magnitude falls below the prune threshold are dropped,
    and iteration is always in lexicographic multi-index order. States are
    not normalized automatically.

    Attributes:
        dims: The dimension of each party.
    """

    def __init__(self,
                 dims: Iterable[int],
                 amps: Mapping[Sequence[int], complex],
                 prune_threshold: float = PRUNE_THRESHOLD) -> None:
        """Initializes a state from already accumulated amplitudes.

        Args:
            dims: Per-party dimensions.
            amps: A mapping from multi-index to amplitude. Missing keys mean
                an amplitude of zero.
            prune_threshold: Amplitudes with a smaller magnitude are dropped.

        Raises:
            DimensionMismatchError: An index doesn't fit the dims.
        """
        self._dims = _check_dims(dims)
        kept = SortedDict()
        for index, amp in amps.items():
            key = _check_index(self._dims, index)
            amp = complex(amp)
            if abs(amp) >= prune_threshold and abs(amp) > 0:
                kept[key] = amp
        self._amps = kept
        self._indices = np.array(list(kept.keys()), dtype=np.int64).reshape(
            (len(kept), len(self._dims)))
        self._values = np.array(list(kept.values()), dtype=np.complex128)
        self._indices.flags.writeable = False
        self._values.flags.writeable = False

    @property
    def dims(self) -> Tuple[int, ...]:
        return self._dims

    @property
    def num_parties(self) -> int:
        return len(self._dims)

    def hilbert_dim(self) -> int:
        """The dimension of the full (dense) state space."""
        result = 1
        for d in self._dims:
            result *= d
        return result

    def amplitude(self, index: Sequence[int]) -> complex:
        """Returns the amplitude at a multi-index, zero if absent."""
        key = _check_index(self._dims, index)
        return self._amps.get(key, 0j)

    def items(self) -> Iterator[Tuple[MultiIndex, complex]]:
        """Iterates (multi-index, amplitude) pairs in lexicographic order."""
        return iter(self._amps.items())

    def support(self) -> List[MultiIndex]:
        return list(self._amps.keys())

    def support_size(self) -> int:
        return len(self._amps)

    def __len__(self):
        return len(self._amps)

    def indices_array(self) -> np.ndarray:
        """A read-only (support_size, num_parties) array of digits."""
        return self._indices

    def amplitudes_array(self) -> np.ndarray:
        """A read-only array of amplitudes aligned with indices_array."""
        return self._values

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self._values)**2)))

    def is_normalized(self, atol: float = 1e-12) -> bool:
        return abs(self.norm()**2 - 1) <= atol

    def normalized(self) -> 'SparseState':
        """Returns this state divided by its norm.

        Raises:
            ValueError: The state is zero.
        """
        n = self.norm()
        if n == 0:
            raise ValueError('Cannot normalize the zero state.')
        return self.scaled(1 / n)

    def scaled(self, factor: complex) -> 'SparseState':
        return SparseState(self._dims,
                           {k: v * factor for k, v in self._amps.items()})

    def tensor(self, other: 'SparseState') -> 'SparseState':
        """The tensor product self (x) other, parties of self first."""
        amps = {}  # type: Dict[MultiIndex, complex]
        for k1, v1 in self._amps.items():
            for k2, v2 in other._amps.items():
                amps[k1 + k2] = v1 * v2
        return SparseState(self._dims + other._dims, amps)

    def to_dense(self) -> np.ndarray:
        """The state as a dense vector in mixed-radix (big-endian) order.

        Raises:
            ValueError: The dense vector would be unreasonably large.
        """
        size = self.hilbert_dim()
        if size > MAX_DENSE_SIZE:
            raise ValueError(
                'Refusing to densify a state of dimension {}.'.format(size))
        result = np.zeros(size, dtype=np.complex128)
        if len(self._amps):
            flat = np.ravel_multi_index(self._indices.T, self._dims)
            result[flat] = self._values
        return result

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self._dims == other._dims and
                list(self._amps.items()) == list(other._amps.items()))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((SparseState, self._dims, tuple(self._amps.items())))

    def __repr__(self):
        return 'qmask.SparseState(dims={!r}, amps={!r})'.format(
            self._dims, dict(self._amps.items()))

    def __str__(self):
        terms = ['({:.6g})|{}>'.format(v, ','.join(str(e + 1) for e in k))
                 for k, v in self._amps.items()]
        return ' + '.join(terms) if terms else '0'


def make_state(dims: Iterable[int],
               entries: Iterable[Tuple[Sequence[int], complex]]
               ) -> SparseState:
    """Builds a state from (multi-index, amplitude) entries.

    Duplicate indices are summed before pruning, so exactly cancelling
    entries disappear from the support.

    Args:
        dims: Per-party dimensions.
        entries: 0-based multi-indices paired with amplitudes.

    Returns:
        The pruned, lexicographically ordered state. It is not normalized.

    Raises:
        DimensionMismatchError: An index doesn't fit the dims.
    """
    dims = _check_dims(dims)
    acc = {}  # type: Dict[MultiIndex, complex]
    for index, amp in entries:
        key = _check_index(dims, index)
        acc[key] = acc.get(key, 0j) + complex(amp)
    return SparseState(dims, acc)


def inner(a: SparseState, b: SparseState) -> complex:
    """Returns <a|b>, conjugating the first argument.

    Raises:
        DimensionMismatchError: The states live on different systems.
    """
    if a.dims != b.dims:
        raise DimensionMismatchError(
            'Cannot take the inner product of states with dims {!r} and '
            '{!r}.'.format(a.dims, b.dims))
    if b.support_size() < a.support_size():
        return complex(np.conj(inner(b, a)))
    total = 0j
    for index, amp in a.items():
        other = b._amps.get(index)  # pylint: disable=protected-access
        if other is not None:
            total += amp.conjugate() * other
    return total


def linear_combination(coeffs: Sequence[complex],
                       states: Sequence[SparseState]) -> SparseState:
    """Returns sum_l coeffs[l] * states[l], pruned.

    Raises:
        ValueError: There are no states, or the counts differ.
        DimensionMismatchError: The states live on different systems.
    """
    if len(coeffs) != len(states):
        raise ValueError('Got {} coefficients for {} states.'.format(
            len(coeffs), len(states)))
    if not states:
        raise ValueError('Need at least one state to combine.')
    dims = states[0].dims
    acc = {}  # type: Dict[MultiIndex, complex]
    for c, s in zip(coeffs, states):
        if s.dims != dims:
            raise DimensionMismatchError(
                'Cannot combine states with dims {!r} and {!r}.'.format(
                    dims, s.dims))
        c = complex(c)
        if c == 0:
            continue
        for index, amp in s.items():
            acc[index] = acc.get(index, 0j) + c * amp
    return SparseState(dims, acc)


def max_amplitude_deviation(a: SparseState, b: SparseState) -> float:
    """The largest absolute amplitude difference over the union of supports.

    Raises:
        DimensionMismatchError: The states live on different systems.
    """
    if a.dims != b.dims:
        raise DimensionMismatchError(
            'Cannot compare states with dims {!r} and {!r}.'.format(
                a.dims, b.dims))
    keys = set(a.support()) | set(b.support())
    return max((abs(a.amplitude(k) - b.amplitude(k)) for k in keys),
               default=0.0)


def state_to_json_dict(state: SparseState) -> Dict[str, Any]:
    """The state dump structure, with 1-based digits in sorted order.

    Negative zeros are written as 0.0.
    """
    return {
        'dims': list(state.dims),
        'amps': [{'idx': [e + 1 for e in index],
                  're': float(amp.real) + 0.0,
                  'im': float(amp.imag) + 0.0}
                 for index, amp in state.items()],
    }


def state_from_json_dict(data: Mapping[str, Any]) -> SparseState:
    """Parses the state dump structure written by state_to_json_dict.

    Raises:
        ValueError: The structure is malformed.
        DimensionMismatchError: An index doesn't fit the dims.
    """
    try:
        dims = data['dims']
        entries = [([int(e) - 1 for e in amp['idx']],
                    complex(float(amp['re']), float(amp['im'])))
                   for amp in data['amps']]
    except (KeyError, TypeError) as ex:
        raise ValueError('Malformed state dump: {}'.format(ex)) from ex
    return make_state(dims, entries)


def state_to_json(state: SparseState) -> str:
    return json.dumps(state_to_json_dict(state), indent=2) + '\n'


def state_from_json(text: str) -> SparseState:
    return state_from_json_dict(json.loads(text))
