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

"""Command-line entry point: python -m qmask or the qmask script."""

import argparse
import logging
import sys
from typing import List, Optional

from qmask import latin, maskers
from qmask.cli import commands
from qmask.cli.run_config import (
    DEFAULT_FORMAT,
    DEFAULT_REPORT_FORMAT,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOL,
    RunConfig,
)

logger = logging.getLogger(__name__)


class UsageError(ValueError):
    """The command line could not be parsed."""


class _ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, so bad usage maps to exit 1."""

    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> List[int]:
    """Parses '2,3,4' or the inclusive range '2..4'."""
    text = text.strip()
    if not text:
        return []
    if '..' in text:
        low, high = text.split('..', 1)
        return list(range(int(low), int(high) + 1))
    return [int(e) for e in text.split(',')]


def _name_list(text: str) -> List[str]:
    return [e.strip() for e in text.split(',') if e.strip()]


def _add_masker_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--scheme', required=True, choices=maskers.SCHEMES,
                        help='Masking construction.')
    parser.add_argument('--d', type=int, default=None,
                        help='Input dimension.')
    parser.add_argument('--pair', default=None,
                        help='For mols: V and W square files, as V,W.')
    parser.add_argument('--out', default=None,
                        help='Output path. Defaults to stdout.')


def _add_check_arguments(parser: argparse.ArgumentParser,
                         default_format: str = DEFAULT_FORMAT) -> None:
    parser.add_argument('--samples', type=int, default=DEFAULT_SAMPLES,
                        help='Random superpositions to check.')
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED,
                        help='Seed of the random superpositions.')
    parser.add_argument('--tol', type=float, default=DEFAULT_TOL,
                        help='Largest acceptable max-entry deviation.')
    parser.add_argument('--format', choices=['json', 'csv'],
                        default=default_format, help='Output format.')
    parser.add_argument('--diagnostic', action='store_true',
                        help='Also report trace-norm deviations.')


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog='qmask',
        description='Construct quantum information maskers and certify that '
                    'every party is left with an input-independent state.')
    parser.add_argument('--verbose', action='store_true',
                        help='Log debug messages to stderr.')
    sub = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
    sub.required = True

    mask = sub.add_parser('mask', help='Encode an input state.')
    _add_masker_arguments(mask)
    source = mask.add_mutually_exclusive_group()
    source.add_argument('--coeffs', default=None,
                        help='Comma-separated amplitudes, e.g. 0.6,0.8J.')
    source.add_argument('--basis', type=int, default=None,
                        help='Encode the basis state |j>, counting from 0.')
    source.add_argument('--manifest', action='store_true',
                        help='Write the masker manifest instead.')
    mask.set_defaults(handler=commands.cmd_mask)

    check = sub.add_parser('verify', help='Certify the masking property.')
    _add_masker_arguments(check)
    _add_check_arguments(check)
    check.set_defaults(handler=commands.cmd_verify)

    squares = sub.add_parser('latin', help='Orthogonal Latin squares.')
    actions = squares.add_subparsers(dest='action',
                                     parser_class=_ArgumentParser)
    actions.required = True
    latin_check = actions.add_parser('check', help='Test orthogonality.')
    latin_check.add_argument('first', help='Square file V.')
    latin_check.add_argument('second', help='Square file W.')
    cyclic = actions.add_parser('cyclic', help='The cyclic pair, odd d.')
    cyclic.add_argument('--d', type=int, required=True)
    cyclic.add_argument('--out', default=None,
                        help='Output square files, as V,W.')
    search = actions.add_parser('search', help='Search for a pair.')
    search.add_argument('--d', type=int, required=True)
    search.add_argument('--budget', type=int,
                        default=latin.DEFAULT_NODE_BUDGET,
                        help='Most symbol assignments to try.')
    search.add_argument('--out', default=None,
                        help='Output square files for a found pair, as V,W.')
    squares.set_defaults(handler=commands.cmd_latin)

    table = sub.add_parser('report', help='Certify many maskers at once.')
    table.add_argument('--schemes', type=_name_list, default=[],
                       help='Comma-separated schemes.')
    table.add_argument('--dims', type=_int_list, default=[],
                       help='Input dimensions, as 2,3,4 or 2..4.')
    table.add_argument('--out', default=None,
                       help='Output path. Defaults to stdout.')
    _add_check_arguments(table, default_format=DEFAULT_REPORT_FORMAT)
    table.set_defaults(handler=commands.cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Runs a command line and returns its exit code.

    Args:
        argv: The arguments, without the program name. Defaults to
            sys.argv[1:].

    Returns:
        0 on success, 1 for usage or construction errors, 2 if a
        verification fails.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as ex:
        sys.stderr.write('qmask: usage error: {}\n'.format(ex))
        return commands.EXIT_ERROR
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr)
    if args.verbose:
        logging.getLogger('qmask').setLevel(logging.DEBUG)

    config = RunConfig.from_namespace(args)
    logger.debug('Resolved %r', config)
    try:
        return args.handler(config)
    except (ValueError, EnvironmentError) as ex:
        sys.stderr.write('qmask: error: {}\n'.format(ex))
        return commands.EXIT_ERROR
