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

"""The fully resolved settings of one command-line run."""

import json
from typing import Any, Dict, Mapping, Optional

DEFAULT_SAMPLES = 100
DEFAULT_SEED = 42
DEFAULT_TOL = 1e-10
DEFAULT_FORMAT = 'json'
DEFAULT_REPORT_FORMAT = 'csv'

# Namespace entries that steer the process rather than the computation.
_EXCLUDED = ('handler', 'verbose')


class RunConfig:
    """An immutable command plus its options, defaults already applied.

    The config is written into every output so a file records how it was
    made; identical configs give byte-identical outputs.

    Attributes:
        command: The subcommand, e.g. 'verify' or 'latin search'.
    """

    def __init__(self, command: str, options: Mapping[str, Any]) -> None:
        self.command = command
        self._options = dict(sorted(options.items()))

    @staticmethod
    def from_namespace(namespace) -> 'RunConfig':
        """Resolves a parsed argparse namespace."""
        options = {k: v for k, v in vars(namespace).items()
                   if k not in _EXCLUDED and k != 'command'}
        command = namespace.command
        action = options.pop('action', None)
        if action is not None:
            command = '{} {}'.format(command, action)
        return RunConfig(command, options)

    def get(self, key: str, default: Optional[Any] = None) -> Any:
        return self._options.get(key, default)

    def __getitem__(self, key: str) -> Any:
        return self._options[key]

    def to_json_dict(self) -> Dict[str, Any]:
        result = {'command': self.command}  # type: Dict[str, Any]
        result.update(self._options)
        return result

    def to_json_line(self) -> str:
        """A compact one-line rendering, used in CSV headers."""
        return json.dumps(self.to_json_dict(), separators=(',', ':'))

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.to_json_dict() == other.to_json_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None  # type: ignore

    def __repr__(self):
        return 'qmask.cli.RunConfig({!r}, {!r})'.format(self.command,
                                                        self._options)
