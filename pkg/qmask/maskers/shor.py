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

"""The Shor nine-qubit code used as a masker."""

import functools

import numpy as np

from qmask import states
from qmask.maskers.masker import Masker


def _block(sign: int) -> states.SparseState:
    s = np.sqrt(0.5)
    return states.make_state([2, 2, 2],
                             [((0, 0, 0), s), ((1, 1, 1), sign * s)])


def shor_masker() -> Masker:
    """The nine-qubit Shor code as a masker.

    Input |0> maps to ((|000> + |111>)/sqrt(2))**3 and |1> to
    ((|000> - |111>)/sqrt(2))**3. Each image has 8 amplitudes of
    magnitude 1/(2 sqrt(2)), and every single qubit of every encoding is
    maximally mixed.
    """
    images = [functools.reduce(states.SparseState.tensor, [_block(sign)] * 3)
              for sign in [+1, -1]]
    return Masker('shor', 2, images)
