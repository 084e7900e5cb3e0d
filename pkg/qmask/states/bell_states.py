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

"""Generalized Bell states, the bipartite maximally entangled basis."""

from typing import List

from qmask import linalg
from qmask.states.sparse_state import SparseState


def generalized_bell_state(d: int, k: int) -> SparseState:
    """Returns (1/sqrt(d)) sum_j omega**(j*k) |jj> with omega = e^(2 pi i/d).

    Args:
        d: The local dimension, at least 2.
        k: Which of the d states, taken mod d.

    Raises:
        ValueError: d is below 2.
    """
    if d < 2:
        raise ValueError('Bell states need local dimension >= 2, got '
                         '{}.'.format(d))
    scale = d**-0.5
    return SparseState(
        (d, d),
        {(j, j): linalg.root_of_unity_power(d, j * k) * scale
         for j in range(d)})


def generalized_bell_states(d: int) -> List[SparseState]:
    """All d generalized Bell states of local dimension d, in order of k."""
    return [generalized_bell_state(d, k) for k in range(d)]
