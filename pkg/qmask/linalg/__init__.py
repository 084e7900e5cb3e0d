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

"""Types and methods related to dense linear algebra.

Avoids duplicating functionality present in numpy.
"""

from qmask.linalg.combinators import (
    fourier_matrix,
    kron,
    root_of_unity_power,
)
from qmask.linalg.predicates import (
    is_density_matrix,
    is_hermitian,
    is_positive_semidefinite,
    is_unitary,
)
from qmask.linalg.tolerance import (
    max_deviation,
    Tolerance,
)
