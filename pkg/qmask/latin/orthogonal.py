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

"""Orthogonality of Latin squares and the cyclic construction for odd d."""

import numpy as np

from qmask.latin.latin_square import LatinSquare


class UnsupportedOrderError(ValueError):
    """A construction was asked for an order it cannot produce."""


def _check_same_order(first: LatinSquare, second: LatinSquare) -> int:
    if first.order != second.order:
        raise ValueError('Squares have different orders {} and {}.'.format(
            first.order, second.order))
    return first.order


def are_orthogonal(first: LatinSquare, second: LatinSquare) -> bool:
    """Determines if superimposing the squares yields all d**2 symbol pairs.

    Raises:
        ValueError: The squares have different orders.
    """
    d = _check_same_order(first, second)
    seen = np.zeros((d, d), dtype=bool)
    for v, w in zip(first.cells.flat, second.cells.flat):
        if seen[v - 1, w - 1]:
            return False
        seen[v - 1, w - 1] = True
    return True


def distinct_pair_count(first: LatinSquare, second: LatinSquare) -> int:
    """The number of distinct (first, second) symbol pairs over all cells.

    Raises:
        ValueError: The squares have different orders.
    """
    _check_same_order(first, second)
    pairs = np.stack([first.cells.reshape(-1), second.cells.reshape(-1)],
                     axis=1)
    return len(np.unique(pairs, axis=0))


class MOLSPair:
    """Two Latin squares of the same order, optionally certified orthogonal.

    Attributes:
        first: The square V.
        second: The square W.
        certified: Whether are_orthogonal has confirmed the pair.
    """

    def __init__(self,
                 first: LatinSquare,
                 second: LatinSquare,
                 certified: bool = False) -> None:
        """
        Raises:
            ValueError: The orders differ, or certified is set on a pair that
                isn't orthogonal.
        """
        _check_same_order(first, second)
        if certified and not are_orthogonal(first, second):
            raise ValueError('Cannot certify a pair that is not orthogonal.')
        self.first = first
        self.second = second
        self.certified = certified

    @staticmethod
    def certify(first: LatinSquare, second: LatinSquare) -> 'MOLSPair':
        """Checks orthogonality and records the verdict in the pair."""
        return MOLSPair(first, second,
                        certified=are_orthogonal(first, second))

    @property
    def order(self) -> int:
        return self.first.order

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self.first == other.first and
                self.second == other.second and
                self.certified == other.certified)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((MOLSPair, self.first, self.second, self.certified))

    def __repr__(self):
        return 'qmask.MOLSPair({!r}, {!r}, certified={!r})'.format(
            self.first, self.second, self.certified)


def cyclic_pair(d: int) -> MOLSPair:
    """The circulant pair v_jk = k - j + 1, w_jk = j + k - 1 (mod d).

    Residues are taken in 1..d and j, k count from 1. For odd d the map
    k -> 2k - l is a bijection mod d, which is what makes the two squares
    orthogonal.

    Args:
        d: An odd order of at least 3.

    Returns:
        The certified pair.

    Raises:
        UnsupportedOrderError: d is even or below 3.
    """
    if d < 3 or d % 2 == 0:
        raise UnsupportedOrderError(
            'The cyclic construction needs an odd order >= 3, got '
            '{}.'.format(d))
    j, k = np.indices((d, d))
    v = (k - j) % d + 1
    w = (j + k) % d + 1
    return MOLSPair(LatinSquare(v), LatinSquare(w), certified=True)


def doubling_is_bijective(d: int, l: int) -> bool:
    """Whether {2k - l mod d : k = 1..d} covers every residue class."""
    if d < 1:
        raise ValueError('Modulus must be positive: {}'.format(d))
    return len({(2 * k - l) % d for k in range(1, d + 1)}) == d


def reduce_pair(pair: MOLSPair) -> MOLSPair:
    """Normalizes a pair without changing whether it is orthogonal.

    Columns are permuted so V's first row reads 1..d, rows so V's first
    column reads 1..d (the same permutations are applied to W), and W's
    symbols are relabelled so W's first row reads 1..d.

    Args:
        pair: Any pair of Latin squares of equal order.

    Returns:
        The reduced pair, with the same certified flag.
    """
    v = np.array(pair.first.cells)
    w = np.array(pair.second.cells)
    columns = np.argsort(v[0])
    v, w = v[:, columns], w[:, columns]
    rows = np.argsort(v[:, 0])
    v, w = v[rows], w[rows]
    relabel = np.empty(pair.order + 1, dtype=np.int64)
    relabel[w[0]] = np.arange(1, pair.order + 1)
    w = relabel[w]
    return MOLSPair(LatinSquare(v), LatinSquare(w),
                    certified=pair.certified)
