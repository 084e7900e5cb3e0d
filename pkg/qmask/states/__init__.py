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

"""Sparse pure states, their inner products and reduced states."""

from qmask.states.bell_states import (
    generalized_bell_state,
    generalized_bell_states,
)
from qmask.states.density_matrix import (
    DensityMatrix,
)
from qmask.states.partial_trace import (
    lemma_a_trace,
    partial_trace,
    partial_trace_general,
    reduce_party,
)
from qmask.states.sparse_state import (
    DimensionMismatchError,
    inner,
    linear_combination,
    make_state,
    max_amplitude_deviation,
    MultiIndex,
    PRUNE_THRESHOLD,
    SparseState,
    state_from_json,
    state_from_json_dict,
    state_to_json,
    state_to_json_dict,
)
