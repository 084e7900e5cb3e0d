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

# Import sub-modules.

from qmask import (
    linalg,
    states,
    latin,
    maskers,
    verify,
    testing,
    cli,
)

# Also flatten some of the sub-modules.

from qmask.states import (
    DensityMatrix,
    DimensionMismatchError,
    generalized_bell_state,
    generalized_bell_states,
    inner,
    lemma_a_trace,
    linear_combination,
    make_state,
    max_amplitude_deviation,
    MultiIndex,
    partial_trace,
    partial_trace_general,
    reduce_party,
    SparseState,
    state_from_json,
    state_from_json_dict,
    state_to_json,
    state_to_json_dict,
)

from qmask.latin import (
    are_orthogonal,
    cyclic_pair,
    DEFAULT_NODE_BUDGET,
    distinct_pair_count,
    doubling_is_bijective,
    is_latin,
    LatinSquare,
    MOLSPair,
    mols_search,
    read_square,
    reduce_pair,
    SearchResult,
    SquareFormatError,
    UnsupportedOrderError,
    write_square,
)

from qmask.maskers import (
    bell_coefficient,
    bell_masker,
    CertificationRequiredError,
    embedded_masker,
    encode,
    InputState,
    Masker,
    masker_to_json,
    mols_masker,
    ResourceCapError,
    shor_masker,
    symbol_set_conditions,
)

from qmask.verify import (
    gram_check,
    marginal_spread,
    masking_check,
    MaskingReport,
    PartyDeviation,
    report_to_json,
    sample_input,
    ThreadlessPool,
    two_party_chain_check,
    two_party_check,
)

from qmask.linalg import (
    Tolerance,
)

from qmask._version import (
    __version__,
)
