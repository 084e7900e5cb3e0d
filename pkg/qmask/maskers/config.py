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

"""Resource limits for masker construction, read from the environment."""

import os
from typing import Optional

ENV_CAP_D = 'QMASK_CAP_D'

DEFAULT_CAP = 6


class ResourceCapError(ValueError):
    """A construction would exceed the configured size limit."""


def bell_cap_from_environment() -> int:
    """Returns the largest input dimension bell_masker builds by default.

    Optional Environment Variables:
        QMASK_CAP_D: An integer of at least 2. Defaults to 6, where each image
            already holds 46656 amplitudes.

    Raises:
        EnvironmentError: The environment variable is set but isn't an integer
            of at least 2.
    """
    raw = os.environ.get(ENV_CAP_D)
    if raw is None or not raw.strip():
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 2:
        raise EnvironmentError(
            'Environment variable {} must be an integer >= 2, got '
            '{!r}.'.format(ENV_CAP_D, raw))
    return cap


def check_bell_cap(d: int, cap: Optional[int] = None) -> None:
    """Raises ResourceCapError if d exceeds the cap.

    Args:
        d: The requested input dimension.
        cap: The limit to apply. Defaults to bell_cap_from_environment().
    """
    if cap is None:
        cap = bell_cap_from_environment()
    if d > cap:
        raise ResourceCapError(
            'Bell masker of dimension {} exceeds the cap of {} ({} amplitudes '
            'per image). Raise the cap with {} or pass a cap explicitly.'
            .format(d, cap, d**d, ENV_CAP_D))
