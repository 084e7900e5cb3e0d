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

import itertools

import numpy as np
import pytest

import qmask
from qmask.testing import EqualsTester

KLEIN_V4 = qmask.LatinSquare([[1, 2, 3, 4], [2, 1, 4, 3],
                              [3, 4, 1, 2], [4, 3, 2, 1]])
KLEIN_W4 = qmask.LatinSquare([[1, 2, 3, 4], [4, 3, 2, 1],
                              [2, 1, 4, 3], [3, 4, 1, 2]])


def test_klein_pair_is_orthogonal():
    assert qmask.are_orthogonal(KLEIN_V4, KLEIN_W4)
    assert qmask.are_orthogonal(KLEIN_W4, KLEIN_V4)
    assert qmask.distinct_pair_count(KLEIN_V4, KLEIN_W4) == 16


def test_square_with_itself_is_not_orthogonal():
    for sq in [KLEIN_V4, qmask.cyclic_pair(3).first,
               qmask.LatinSquare([[1, 2], [2, 1]])]:
        assert not qmask.are_orthogonal(sq, sq)
        assert qmask.distinct_pair_count(sq, sq) == sq.order


def test_order_mismatch():
    with pytest.raises(ValueError, match='different orders'):
        _ = qmask.are_orthogonal(KLEIN_V4, qmask.cyclic_pair(3).first)
    with pytest.raises(ValueError, match='different orders'):
        _ = qmask.distinct_pair_count(KLEIN_V4, qmask.cyclic_pair(3).first)
    with pytest.raises(ValueError, match='different orders'):
        _ = qmask.MOLSPair(KLEIN_V4, qmask.cyclic_pair(3).first)


def test_orthogonality_agrees_with_counting():
    squares = [KLEIN_V4, KLEIN_W4, KLEIN_V4.transpose(),
               qmask.LatinSquare([[1, 2, 3, 4], [3, 4, 1, 2],
                                  [4, 3, 2, 1], [2, 1, 4, 3]]),
               qmask.LatinSquare([[1, 2, 3, 4], [2, 3, 4, 1],
                                  [3, 4, 1, 2], [4, 1, 2, 3]])]
    for a, b in itertools.product(squares, repeat=2):
        assert (qmask.are_orthogonal(a, b) ==
                (qmask.distinct_pair_count(a, b) == 16))
        assert qmask.are_orthogonal(a, b) == qmask.are_orthogonal(b, a)


def test_cyclic_pair_order_3():
    pair = qmask.cyclic_pair(3)
    assert pair.first.rows() == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]
    assert pair.second.rows() == [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
    # 1 - 2 + 1 = 0, represented by 3.
    assert pair.first.symbol(2, 1) == 3
    assert pair.certified
    assert pair.order == 3


@pytest.mark.parametrize('d', [3, 5, 7, 9, 11])
def test_cyclic_pair_is_certified(d):
    pair = qmask.cyclic_pair(d)
    assert qmask.is_latin(pair.first.cells)
    assert qmask.is_latin(pair.second.cells)
    assert qmask.are_orthogonal(pair.first, pair.second)
    assert qmask.distinct_pair_count(pair.first, pair.second) == d * d
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            assert pair.first.symbol(j, k) % d == (k - j + 1) % d
            assert pair.second.symbol(j, k) % d == (j + k - 1) % d


@pytest.mark.parametrize('d', [-1, 0, 1, 2, 4, 6, 10])
def test_cyclic_pair_unsupported(d):
    with pytest.raises(qmask.UnsupportedOrderError, match='odd order'):
        _ = qmask.cyclic_pair(d)
    with pytest.raises(ValueError):
        _ = qmask.cyclic_pair(d)


def test_doubling_is_bijective_exactly_for_odd_moduli():
    for d in range(3, 13):
        for l in range(1, d + 1):
            assert qmask.doubling_is_bijective(d, l) == (d % 2 == 1)
    with pytest.raises(ValueError):
        _ = qmask.doubling_is_bijective(0, 1)


def test_pair_certification():
    pair = qmask.MOLSPair(KLEIN_V4, KLEIN_W4)
    assert not pair.certified
    assert qmask.MOLSPair.certify(KLEIN_V4, KLEIN_W4).certified
    assert not qmask.MOLSPair.certify(KLEIN_V4, KLEIN_V4).certified
    with pytest.raises(ValueError, match='Cannot certify'):
        _ = qmask.MOLSPair(KLEIN_V4, KLEIN_V4, certified=True)


def test_pair_equality():
    eq = EqualsTester()
    eq.add_equality_group(qmask.MOLSPair(KLEIN_V4, KLEIN_W4, certified=True),
                          qmask.MOLSPair.certify(KLEIN_V4, KLEIN_W4))
    eq.add_equality_group(qmask.MOLSPair(KLEIN_V4, KLEIN_W4))
    eq.add_equality_group(qmask.MOLSPair(KLEIN_W4, KLEIN_V4))
    eq.add_equality_group(qmask.cyclic_pair(3))


def test_reduce_pair():
    # Shuffle rows, columns and symbols of a cyclic pair.
    prng = np.random.RandomState(3)
    pair = qmask.cyclic_pair(5)
    rows = prng.permutation(5)
    cols = prng.permutation(5)
    sym_v = np.concatenate([[0], prng.permutation(5) + 1])
    sym_w = np.concatenate([[0], prng.permutation(5) + 1])
    v = sym_v[pair.first.cells[rows][:, cols]]
    w = sym_w[pair.second.cells[rows][:, cols]]
    shuffled = qmask.MOLSPair.certify(qmask.LatinSquare(v),
                                      qmask.LatinSquare(w))
    assert shuffled.certified

    reduced = qmask.reduce_pair(shuffled)
    assert reduced.certified
    assert reduced.first.rows()[0] == [1, 2, 3, 4, 5]
    assert [row[0] for row in reduced.first.rows()] == [1, 2, 3, 4, 5]
    assert reduced.second.rows()[0] == [1, 2, 3, 4, 5]
    assert qmask.are_orthogonal(reduced.first, reduced.second)


def test_reduce_pair_keeps_non_orthogonality():
    pair = qmask.MOLSPair(KLEIN_V4.transpose(), KLEIN_V4)
    reduced = qmask.reduce_pair(pair)
    assert not reduced.certified
    assert (qmask.distinct_pair_count(reduced.first, reduced.second) ==
            qmask.distinct_pair_count(pair.first, pair.second))
