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

"""The 2d-party masker built from products of generalized Bell states."""

import functools
import logging
from typing import Optional

from qmask import states
from qmask.maskers.config import check_bell_cap
from qmask.maskers.masker import Masker

logger = logging.getLogger(__name__)


def bell_masker(d: int, cap: Optional[int] = None) -> Masker:
    """Masks a d-level system into 2d parties of dimension d.

    Input |l> maps to the product of d copies of the generalized Bell state
    (1/sqrt(d)) sum_k omega**(kl) |kk>. Every image has d**d amplitudes of
    magnitude d**(-d/2), and every single party of every encoding is
    maximally mixed.

    Args:
        d: The input dimension, at least 2.
        cap: The largest d to build. Defaults to the QMASK_CAP_D environment
            variable, or 6.

    Raises:
        ValueError: d is below 2.
        ResourceCapError: d exceeds the cap.
    """
    if d < 2:
        raise ValueError('Bell masker needs d >= 2, got {}.'.format(d))
    check_bell_cap(d, cap)
    images = []
    for l in range(d):
        pair = states.generalized_bell_state(d, l)
        images.append(functools.reduce(states.SparseState.tensor, [pair] * d))
    logger.debug('Built bell masker for d=%d with %d amplitudes per image.',
                 d, images[0].support_size())
    return Masker('bell', d, images)
