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

"""Deterministic pseudo-random input states keyed by (seed, position)."""

import numpy as np

from qmask.maskers import InputState

DEFAULT_SEED = 42


def sample_input(d: int, seed: int, position: int) -> InputState:
    """A pseudo-random unit input of dimension d, uniform on the sphere.

    Real and imaginary parts are independent standard normals drawn from a
    Philox counter-based generator keyed by the seed, with the position
    selecting a disjoint block of the counter space. The same (d, seed,
    position) always gives the same state, independent of what else has
    been sampled.

    Args:
        d: The input dimension, at least 2.
        seed: Non-negative key of the generator.
        position: Non-negative index of the sample in the stream.

    Raises:
        ValueError: d is below 2 or seed or position is negative.
    """
    if d < 2:
        raise ValueError('Input dimension must be >= 2, got {}.'.format(d))
    if seed < 0 or position < 0:
        raise ValueError(
            'Seed and position must be non-negative, got {} and {}.'.format(
                seed, position))
    bit_generator = np.random.Philox(key=seed, counter=position << 192)
    parts = np.random.Generator(bit_generator).standard_normal((2, d))
    v = parts[0] + 1j * parts[1]
    return InputState(v / np.linalg.norm(v))
