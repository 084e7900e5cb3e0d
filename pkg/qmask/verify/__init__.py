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

"""Certification of the masking property and its reports."""

from qmask.verify.checks import (
    DEFAULT_SAMPLES,
    gram_check,
    marginal_spread,
    masking_check,
    ThreadlessPool,
    two_party_chain_check,
    two_party_check,
)
from qmask.verify.report import (
    MaskingReport,
    PartyDeviation,
    report_to_json,
)
from qmask.verify.sampling import (
    DEFAULT_SEED,
    sample_input,
)
