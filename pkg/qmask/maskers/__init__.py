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

"""Constructions of masking schemes and the encoding of inputs."""

from qmask.maskers.bell import (
    bell_masker,
)
from qmask.maskers.config import (
    bell_cap_from_environment,
    check_bell_cap,
    DEFAULT_CAP,
    ENV_CAP_D,
    ResourceCapError,
)
from qmask.maskers.masker import (
    bell_coefficient,
    encode,
    InputState,
    Masker,
    masker_to_json,
    SCHEMES,
)
from qmask.maskers.mols import (
    CertificationRequiredError,
    embedded_masker,
    mols_masker,
    symbol_set_conditions,
)
from qmask.maskers.shor import (
    shor_masker,
)
