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

"""Tripartite maskers built from pairs of orthogonal Latin squares.

Input |j> maps to (1/sqrt(d)) sum_k |u_jk, v_jk, w_jk> where V and W are the
two squares and u_jk = k. Because the columns of V are permutations the
images are orthonormal, and because the pairs (u, v), (u, w) and (v, w) each
cover every symbol pair exactly once, every party of every encoding is
maximally mixed.
"""

import logging

import numpy as np

from qmask import latin, states
from qmask.maskers.masker import Masker

logger = logging.getLogger(__name__)


class CertificationRequiredError(ValueError):
    """A masker was requested from a pair not certified orthogonal."""


def _covers_all_pairs(a: np.ndarray, b: np.ndarray, d: int) -> bool:
    return len({(int(x), int(y)) for x, y in zip(a.flat, b.flat)}) == d * d


def symbol_set_conditions(pair: latin.MOLSPair) -> bool:
    """Checks the symbol-set conditions that make the tripartite map mask.

    With u_jk = k: every row of U, V and W holds each symbol once, and each of
    the cellwise pairs (u, v), (u, w) and (v, w) takes all d**2 values.
    """
    d = pair.order
    v = pair.first.cells
    w = pair.second.cells
    u = np.tile(np.arange(1, d + 1), (d, 1))
    full = list(range(1, d + 1))
    for m in range(d):
        for square in [u, v, w]:
            if sorted(square[m].tolist()) != full:
                return False
    return (_covers_all_pairs(u, v, d) and
            _covers_all_pairs(u, w, d) and
            _covers_all_pairs(v, w, d))


def _images(pair: latin.MOLSPair):
    d = pair.order
    v = pair.first.cells
    w = pair.second.cells
    scale = d**-0.5
    return [states.make_state([d, d, d],
                              [((k, v[j, k] - 1, w[j, k] - 1), scale)
                               for k in range(d)])
            for j in range(d)]


def mols_masker(pair: latin.MOLSPair,
                allow_uncertified: bool = False) -> Masker:
    """Masks a d-level system into three d-level parties.

    Args:
        pair: A certified pair of orthogonal Latin squares of order >= 3.
        allow_uncertified: Build the map from an uncertified pair anyway,
            without validating the images. Only useful for demonstrating
            that a broken map fails verification.

    Raises:
        CertificationRequiredError: The pair is not certified orthogonal.
        ValueError: The order is below 3, or a certified pair somehow fails
            the symbol-set conditions.
    """
    if pair.order < 3:
        raise ValueError('Latin square maskers need order >= 3, got '
                         '{}.'.format(pair.order))
    if not pair.certified:
        if not allow_uncertified:
            raise CertificationRequiredError(
                'The Latin square pair is not certified orthogonal. Certify '
                'it with MOLSPair.certify first.')
        logger.warning('Building a masker from an uncertified order %d pair.',
                       pair.order)
        return Masker('mols', pair.order, _images(pair), validate=False)
    if not symbol_set_conditions(pair):
        raise ValueError('Certified pair fails the symbol-set conditions.')
    return Masker('mols', pair.order, _images(pair))


def embedded_masker(d: int) -> Masker:
    """Masks an even d-level system into three parties of dimension d + 1.

    Uses the first d images of the masker built from the order d + 1 cyclic
    pair, which exists because d + 1 is odd. This covers d = 6, where no pair
    of orthogonal Latin squares of order 6 exists.

    Raises:
        ValueError: d is odd (use mols_masker on cyclic_pair(d) instead) or
            below 2.
    """
    if d < 2 or d % 2:
        raise ValueError(
            'Embedding needs an even d >= 2, got {}. Odd orders are masked '
            'directly by mols_masker(cyclic_pair(d)).'.format(d))
    base = mols_masker(latin.cyclic_pair(d + 1))
    return Masker('embedded', d, base.images[:d])
