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

"""The certification record produced by masking_check."""

import json
from typing import Any, Dict, Optional, Sequence, Tuple


class PartyDeviation:
    """Worst marginal deviations of one party.

    Attributes:
        party: The party, counted from 1.
        dim: Its local dimension.
        basis_dev: Max-entry deviation over the basis images.
        superpos_dev: Max-entry deviation over the sampled inputs.
        trace_norm_dev: Trace-norm distance over all checked inputs, or None
            outside diagnostic mode.
    """

    def __init__(self,
                 party: int,
                 dim: int,
                 basis_dev: float,
                 superpos_dev: float,
                 trace_norm_dev: Optional[float] = None) -> None:
        self.party = party
        self.dim = dim
        self.basis_dev = basis_dev
        self.superpos_dev = superpos_dev
        self.trace_norm_dev = trace_norm_dev

    def to_json_dict(self) -> Dict[str, Any]:
        data = {
            'party': self.party,
            'dim': self.dim,
            'basis_dev': self.basis_dev,
            'superpos_dev': self.superpos_dev,
        }  # type: Dict[str, Any]
        if self.trace_norm_dev is not None:
            data['trace_norm_dev'] = self.trace_norm_dev
        return data

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.to_json_dict() == other.to_json_dict()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((PartyDeviation, self.party, self.dim, self.basis_dev,
                     self.superpos_dev, self.trace_norm_dev))

    def __repr__(self):
        return ('qmask.PartyDeviation(party={!r}, dim={!r}, basis_dev={!r}, '
                'superpos_dev={!r}, trace_norm_dev={!r})'.format(
                    self.party, self.dim, self.basis_dev, self.superpos_dev,
                    self.trace_norm_dev))


class MaskingReport:
    """Outcome of numerically certifying a masker.

    The report passes exactly when the Gram, basis and superposition
    deviations are all within the tolerance.

    Attributes:
        scheme: The masker's scheme tag.
        d: The input dimension.
        parties: The number of parties.
        local_dims: The dimension of each party.
        tol: The tolerance the deviations were held to.
        seed: The seed of the sampled inputs.
        samples: How many inputs were sampled.
        gram_dev: Max-entry deviation of the Gram matrix from the identity.
        basis_dev: Worst marginal deviation over basis images and parties.
        superpos_dev: Worst marginal deviation over sampled inputs and
            parties.
        trace_norm_dev: Worst trace-norm distance over all checked inputs
            and parties, or None outside diagnostic mode.
        per_party: One PartyDeviation per party, in party order.
    """

    def __init__(self,
                 scheme: str,
                 d: int,
                 local_dims: Sequence[int],
                 tol: float,
                 seed: int,
                 samples: int,
                 gram_dev: float,
                 per_party: Sequence[PartyDeviation]) -> None:
        self.scheme = scheme
        self.d = d
        self.local_dims = tuple(local_dims)  # type: Tuple[int, ...]
        self.tol = tol
        self.seed = seed
        self.samples = samples
        self.gram_dev = gram_dev
        self.per_party = tuple(per_party)  # type: Tuple[PartyDeviation, ...]

    @property
    def parties(self) -> int:
        return len(self.local_dims)

    @property
    def basis_dev(self) -> float:
        return max((p.basis_dev for p in self.per_party), default=0.0)

    @property
    def superpos_dev(self) -> float:
        return max((p.superpos_dev for p in self.per_party), default=0.0)

    @property
    def trace_norm_dev(self) -> Optional[float]:
        devs = [p.trace_norm_dev for p in self.per_party
                if p.trace_norm_dev is not None]
        return max(devs) if devs else None

    @property
    def passed(self) -> bool:
        return max(self.gram_dev, self.basis_dev,
                   self.superpos_dev) <= self.tol

    def to_json_dict(self) -> Dict[str, Any]:
        data = {
            'scheme': self.scheme,
            'd': self.d,
            'parties': self.parties,
            'local_dims': list(self.local_dims),
            'tol': self.tol,
            'seed': self.seed,
            'samples': self.samples,
            'gram_dev': self.gram_dev,
            'basis_dev': self.basis_dev,
            'superpos_dev': self.superpos_dev,
        }  # type: Dict[str, Any]
        if self.trace_norm_dev is not None:
            data['trace_norm_dev'] = self.trace_norm_dev
        data['pass'] = self.passed
        data['per_party'] = [p.to_json_dict() for p in self.per_party]
        return data

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.to_json_dict() == other.to_json_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None  # type: ignore

    def __repr__(self):
        return ('qmask.MaskingReport(scheme={!r}, d={!r}, gram_dev={!r}, '
                'basis_dev={!r}, superpos_dev={!r}, passed={!r})'.format(
                    self.scheme, self.d, self.gram_dev, self.basis_dev,
                    self.superpos_dev, self.passed))


def report_to_json(report: MaskingReport) -> str:
    """Serializes a report; floats use their shortest round-trip form."""
    return json.dumps(report.to_json_dict(), indent=2) + '\n'
