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

"""Utilities for testing code."""

from qmask.testing.equals_tester import (
    EqualsTester,
)
from qmask.testing.lin_alg_utils import (
    assert_max_deviation,
    random_orthonormal_vectors,
    random_sparse_state,
    random_unit_vector,
    random_unitary,
)
