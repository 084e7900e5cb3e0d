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

import argparse

from qmask.cli import build_parser, RunConfig
from qmask.testing import EqualsTester


def test_defaults_are_resolved():
    args = build_parser().parse_args(['verify', '--scheme', 'bell',
                                      '--d', '2'])
    config = RunConfig.from_namespace(args)
    assert config.command == 'verify'
    assert config['samples'] == 100
    assert config['seed'] == 42
    assert config['tol'] == 1e-10
    assert config['format'] == 'json'
    assert config['diagnostic'] is False
    assert config.get('pair') is None
    assert config.get('missing', 5) == 5


def test_report_defaults_to_csv():
    args = build_parser().parse_args(['report', '--schemes', 'bell'])
    assert RunConfig.from_namespace(args)['format'] == 'csv'
    args = build_parser().parse_args(['report', '--format', 'json'])
    assert RunConfig.from_namespace(args)['format'] == 'json'


def test_subaction_joins_command():
    args = build_parser().parse_args(['latin', 'search', '--d', '4'])
    config = RunConfig.from_namespace(args)
    assert config.command == 'latin search'
    assert config['budget'] == 10**7
    assert 'action' not in config.to_json_dict()


def test_process_options_are_excluded():
    args = build_parser().parse_args(['--verbose', 'mask', '--scheme',
                                      'shor', '--basis', '0'])
    data = RunConfig.from_namespace(args).to_json_dict()
    assert 'verbose' not in data
    assert 'handler' not in data


def test_json_rendering_is_sorted():
    config = RunConfig('report', {'seed': 1, 'dims': [2, 3], 'tol': 1e-10})
    assert list(config.to_json_dict().keys()) == ['command', 'dims', 'seed',
                                                  'tol']
    assert config.to_json_line() == (
        '{"command":"report","dims":[2,3],"seed":1,"tol":1e-10}')


def test_from_namespace():
    ns = argparse.Namespace(command='verify', scheme='bell', verbose=True,
                            handler=print)
    assert RunConfig.from_namespace(ns) == RunConfig('verify',
                                                     {'scheme': 'bell'})


def test_equality():
    eq = EqualsTester()
    eq.add_equality_group(RunConfig('a', {'x': 1, 'y': 2}),
                          RunConfig('a', {'y': 2, 'x': 1}))
    eq.add_equality_group(RunConfig('b', {'x': 1, 'y': 2}))
    eq.add_equality_group(RunConfig('a', {'x': 1}))
