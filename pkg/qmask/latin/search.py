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

"""Deterministic backtracking search for a pair of orthogonal Latin squares.

The first square V is enumerated in reduced form (first row and column
0..d-1) and, for each complete V, an orthogonal mate W is sought with its
first row fixed to 0..d-1. Any orthogonal pair can be brought into this form
by permuting rows and columns of both squares and relabelling the symbols of
W, so exhausting the space proves that no pair of that order exists.

Cells of V are filled row by row, preferring the entry of a group table (the
xor table when d is a power of two, addition mod d otherwise) before trying
the remaining symbols in ascending order. Cells of W are chosen by fewest
remaining candidates, ties broken by row-major position. Every symbol
assignment counts as one node against the budget.
"""

import logging
from typing import List, Optional

import numpy as np

from qmask.latin.latin_square import LatinSquare
from qmask.latin.orthogonal import MOLSPair

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**7


class SearchResult:
    """Outcome of mols_search.

    Attributes:
        order: The order that was searched.
        pair: The certified pair found, or None.
        exhausted: True if the whole search space was covered without
            finding a pair.
        nodes: Symbol assignments made.
        squares_tried: Complete first squares for which a mate was sought.
    """

    def __init__(self,
                 order: int,
                 pair: Optional[MOLSPair],
                 exhausted: bool,
                 nodes: int,
                 squares_tried: int) -> None:
        self.order = order
        self.pair = pair
        self.exhausted = exhausted
        self.nodes = nodes
        self.squares_tried = squares_tried

    @property
    def found(self) -> bool:
        return self.pair is not None

    def verdict(self) -> str:
        if self.pair is not None:
            return 'found'
        if self.exhausted:
            return 'none exists (exhaustive)'
        return 'budget exhausted (not a nonexistence proof)'

    def __repr__(self):
        return ('qmask.SearchResult(order={!r}, pair={!r}, exhausted={!r}, '
                'nodes={!r}, squares_tried={!r})'.format(
                    self.order, self.pair, self.exhausted, self.nodes,
                    self.squares_tried))


class _BudgetExhausted(Exception):
    pass


def _preferred_table(d: int) -> List[List[int]]:
    j, k = np.indices((d, d))
    if d & (d - 1) == 0:
        return (j ^ k).tolist()
    return ((j + k) % d).tolist()


def _bits(mask: int) -> List[int]:
    result = []
    s = 0
    while mask:
        if mask & 1:
            result.append(s)
        mask >>= 1
        s += 1
    return result


class _Searcher:

    def __init__(self, d: int, node_budget: int) -> None:
        self.d = d
        self.full = (1 << d) - 1
        self.node_budget = node_budget
        self.nodes = 0
        self.squares_tried = 0
        self.preferred = _preferred_table(d)

    def _count_node(self):
        if self.nodes >= self.node_budget:
            raise _BudgetExhausted()
        self.nodes += 1

    def search(self) -> Optional[List[List[List[int]]]]:
        d = self.d
        v = [[-1] * d for _ in range(d)]
        for k in range(d):
            v[0][k] = k
            v[k][0] = k
        row_used = [1 << j for j in range(d)]
        col_used = [1 << k for k in range(d)]
        row_used[0] = col_used[0] = self.full
        cells = [(j, k) for j in range(1, d) for k in range(1, d)]
        return self._fill_first(v, cells, 0, row_used, col_used)

    def _fill_first(self, v, cells, pos, row_used, col_used):
        if pos == len(cells):
            self.squares_tried += 1
            logger.debug('Order %d: seeking a mate for square %d (%d nodes).',
                         self.d, self.squares_tried, self.nodes)
            w = self._find_mate(v)
            return None if w is None else [v, w]
        j, k = cells[pos]
        free = self.full & ~(row_used[j] | col_used[k])
        candidates = _bits(free)
        p = self.preferred[j][k]
        if p in candidates:
            candidates.remove(p)
            candidates.insert(0, p)
        for s in candidates:
            self._count_node()
            v[j][k] = s
            row_used[j] |= 1 << s
            col_used[k] |= 1 << s
            found = self._fill_first(v, cells, pos + 1, row_used, col_used)
            if found is not None:
                return found
            row_used[j] &= ~(1 << s)
            col_used[k] &= ~(1 << s)
            v[j][k] = -1
        return None

    def _find_mate(self, v):
        d = self.d
        w = [[-1] * d for _ in range(d)]
        row_used = [0] * d
        col_used = [0] * d
        pair_used = [0] * d
        for k in range(d):
            w[0][k] = k
            row_used[0] |= 1 << k
            col_used[k] |= 1 << k
            pair_used[v[0][k]] |= 1 << k
        state = (w, row_used, col_used, pair_used)
        if self._fill_mate(v, state, d * d - d):
            return [list(row) for row in w]
        return None

    def _fill_mate(self, v, state, remaining):
        if remaining == 0:
            return True
        w, row_used, col_used, pair_used = state
        best = None
        best_count = self.d + 1
        best_free = 0
        for j in range(1, self.d):
            for k in range(self.d):
                if w[j][k] >= 0:
                    continue
                free = self.full & ~(row_used[j] | col_used[k] |
                                     pair_used[v[j][k]])
                count = bin(free).count('1')
                if count < best_count:
                    best, best_count, best_free = (j, k), count, free
                    if count == 0:
                        return False
        j, k = best
        for s in _bits(best_free):
            self._count_node()
            bit = 1 << s
            w[j][k] = s
            row_used[j] |= bit
            col_used[k] |= bit
            pair_used[v[j][k]] |= bit
            if self._fill_mate(v, state, remaining - 1):
                return True
            row_used[j] &= ~bit
            col_used[k] &= ~bit
            pair_used[v[j][k]] &= ~bit
            w[j][k] = -1
        return False


def mols_search(d: int,
                node_budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    """Searches for a pair of orthogonal Latin squares of order d.

    The search is deterministic: the same (d, node_budget) always gives the
    same result and statistics. Running out of budget is reported in the
    result, not raised.

    Args:
        d: The order, at least 2.
        node_budget: The most symbol assignments to make.

    Returns:
        A SearchResult holding a certified pair when one was found.

    Raises:
        ValueError: d is below 2 or the budget isn't positive.
    """
    if d < 2:
        raise ValueError('Search order must be >= 2, got {}.'.format(d))
    if node_budget < 1:
        raise ValueError('Node budget must be positive, got {}.'.format(
            node_budget))
    searcher = _Searcher(d, node_budget)
    try:
        squares = searcher.search()
        exhausted = squares is None
    except _BudgetExhausted:
        squares = None
        exhausted = False
    pair = None
    if squares is not None:
        v, w = squares
        pair = MOLSPair(LatinSquare(np.array(v) + 1),
                        LatinSquare(np.array(w) + 1),
                        certified=True)
    result = SearchResult(d, pair, exhausted, searcher.nodes,
                          searcher.squares_tried)
    logger.debug('Order %d search: %s after %d nodes.', d, result.verdict(),
                 searcher.nodes)
    return result
