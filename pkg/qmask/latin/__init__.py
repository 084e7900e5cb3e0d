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

"""Latin squares, their orthogonality, and searches for orthogonal pairs."""

from qmask.latin.latin_square import (
    is_latin,
    LatinSquare,
    read_square,
    SquareFormatError,
    write_square,
)
from qmask.latin.orthogonal import (
    are_orthogonal,
    cyclic_pair,
    distinct_pair_count,
    doubling_is_bijective,
    MOLSPair,
    reduce_pair,
    UnsupportedOrderError,
)
from qmask.latin.search import (
    DEFAULT_NODE_BUDGET,
    mols_search,
    SearchResult,
)
