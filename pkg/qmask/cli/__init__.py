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

"""The command-line interface."""

from qmask.cli.commands import (
    build_masker,
    cmd_latin,
    cmd_mask,
    cmd_report,
    cmd_verify,
    EXIT_ERROR,
    EXIT_FAIL,
    EXIT_OK,
    parse_coefficients,
)
from qmask.cli.main import (
    build_parser,
    main,
    UsageError,
)
from qmask.cli.run_config import (
    RunConfig,
)
