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

"""Numerical certification that a masker hides its input from every party."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from qmask import linalg, states
from qmask.maskers import encode, InputState, Masker
from qmask.verify.report import MaskingReport, PartyDeviation
from qmask.verify.sampling import DEFAULT_SEED, sample_input

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 100


class ThreadlessPool(object):
    """A Pool that does not use any processes or threads.

    Only supports map, close, and join, the later two being trivial.
    """

    # noinspection PyMethodMayBeStatic
    def map(self, func, iterable, chunksize=None):
        assert chunksize is None, 'Chunking not supported by ThreadlessPool'
        return [func(x) for x in iterable]

    def close(self):
        pass

    def join(self):
        pass


def gram_check(masker: Masker) -> float:
    """Max-entry deviation of the images' Gram matrix from the identity."""
    return linalg.max_deviation(masker.gram_matrix(),
                                np.eye(masker.input_dim))


def _marginal_deviations(masker: Masker,
                         state: states.SparseState,
                         diagnostic: bool = False
                         ) -> List[Tuple[float, Optional[float]]]:
    """Per party, the max-entry and (if diagnostic) trace-norm deviations."""
    result = []
    for j, expected in enumerate(masker.expected_marginals):
        rho = states.partial_trace(state, j)
        result.append((rho.max_deviation(expected),
                       rho.trace_norm_distance(expected)
                       if diagnostic else None))
    return result


class _SampleEvaluator:
    """Marginal deviations of the encoding of one sampled input.

    A module-level callable so that process pools can pickle it.
    """

    def __init__(self, masker: Masker, seed: int,
                 diagnostic: bool = False) -> None:
        self.masker = masker
        self.seed = seed
        self.diagnostic = diagnostic

    def __call__(self, position: int) -> List[Tuple[float, Optional[float]]]:
        x = sample_input(self.masker.input_dim, self.seed, position)
        return _marginal_deviations(self.masker, encode(self.masker, x),
                                    self.diagnostic)


class _SampleMarginals:
    """Every party's reduced state for one sampled input."""

    def __init__(self, masker: Masker, seed: int) -> None:
        self.masker = masker
        self.seed = seed

    def __call__(self, position: int) -> List[np.ndarray]:
        x = sample_input(self.masker.input_dim, self.seed, position)
        encoded = encode(self.masker, x)
        return [states.partial_trace(encoded, j).entries
                for j in range(self.masker.parties)]


def masking_check(masker: Masker,
                  samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED,
                  tol: float = linalg.Tolerance.MASKING.atol,
                  pool=None,
                  diagnostic: bool = False) -> MaskingReport:
    """Certifies that every party's marginal is the expected one.

    Checks the Gram matrix of the images, the marginals of every basis image
    and the marginals of `samples` pseudo-random superpositions. Failures
    are recorded in the report, never raised.

    Args:
        masker: The masker to certify.
        samples: How many random inputs to encode, at least 1.
        seed: Seed of the sampled inputs.
        tol: Largest acceptable max-entry deviation.
        pool: Something with a map method, such as a
            multiprocessing.dummy.Pool, used to evaluate samples. The
            report doesn't depend on it. Defaults to a ThreadlessPool.
        diagnostic: Also record each party's worst trace-norm distance to
            its expected marginal. It doesn't affect whether the report
            passes.

    Returns:
        The report.

    Raises:
        ValueError: samples is below 1.
    """
    if samples < 1:
        raise ValueError('Need at least one sample, got {}.'.format(samples))
    pool = pool or ThreadlessPool()

    gram_dev = gram_check(masker)
    basis = [_marginal_deviations(masker, image, diagnostic)
             for image in masker.images]
    sampled = list(pool.map(_SampleEvaluator(masker, seed, diagnostic),
                            range(samples)))

    per_party = []
    for j, dim in enumerate(masker.local_dims):
        trace_norm_dev = None
        if diagnostic:
            trace_norm_dev = float(max(devs[j][1] or 0.0
                                       for devs in basis + sampled))
        per_party.append(PartyDeviation(
            party=j + 1,
            dim=dim,
            basis_dev=float(max(devs[j][0] for devs in basis)),
            superpos_dev=float(max(devs[j][0] for devs in sampled)),
            trace_norm_dev=trace_norm_dev))
    report = MaskingReport(masker.scheme, masker.input_dim,
                           masker.local_dims, tol, seed, samples,
                           float(gram_dev), per_party)
    logger.debug('%r', report)
    return report


def _check_bell(masker: Masker, x: InputState) -> None:
    if masker.scheme != 'bell':
        raise ValueError('Two-party checks need a bell masker, got '
                         '{!r}.'.format(masker.scheme))
    if x.dim != masker.input_dim:
        raise ValueError('Input of dimension {} for a masker of dimension '
                         '{}.'.format(x.dim, masker.input_dim))


def _first_pair_marginal(masker: Masker,
                         x: InputState) -> states.DensityMatrix:
    return states.partial_trace_general(encode(masker, x), [0, 1])


def two_party_check(masker: Masker, x: InputState) -> float:
    """Deviation of the first two parties' state from the Bell mixture.

    For the bell masker the first two parties hold
    sum_k |alpha_k|**2 |psi_k><psi_k| with psi_k the generalized Bell
    states.

    Raises:
        ValueError: The masker isn't a bell masker, or x has the wrong
            dimension.
    """
    _check_bell(masker, x)
    d = masker.input_dim
    expected = states.DensityMatrix.mixture(
        np.abs(x.coeffs)**2,
        [states.generalized_bell_state(d, k).to_dense() for k in range(d)])
    return _first_pair_marginal(masker, x).max_deviation(expected)


def two_party_chain_check(masker: Masker, x: InputState) -> float:
    """Deviation from I/d of the first party traced out of the first two.

    Raises:
        ValueError: The masker isn't a bell masker, or x has the wrong
            dimension.
    """
    _check_bell(masker, x)
    d = masker.input_dim
    first = states.reduce_party(_first_pair_marginal(masker, x), [d, d], [0])
    return first.max_deviation(np.eye(d) / d)


def marginal_spread(masker: Masker,
                    samples: int = DEFAULT_SAMPLES,
                    seed: int = DEFAULT_SEED,
                    pool=None) -> float:
    """How far apart any two inputs' marginals of the same party are.

    The max over parties and pairs of sampled inputs x, y of the max-entry
    distance between the party's reduced states. Unlike masking_check this
    needs no expected marginal.

    Raises:
        ValueError: samples is below 1.
    """
    if samples < 1:
        raise ValueError('Need at least one sample, got {}.'.format(samples))
    pool = pool or ThreadlessPool()

    sampled = pool.map(_SampleMarginals(masker, seed), range(samples))
    spread = 0.0
    for j in range(masker.parties):
        stack = np.array([m[j] for m in sampled])
        for m in stack:
            spread = max(spread, float(np.max(np.abs(stack - m))))
    return spread
