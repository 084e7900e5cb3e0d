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

"""The work behind each subcommand.

Every command takes a resolved RunConfig and returns a process exit code:
0 for success, 2 for a verification failure. Usage and construction
errors are raised as ValueError (or OSError for files) and mapped to exit
code 1 by main.
"""

import csv
import io
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from qmask import latin, maskers, states, verify
from qmask.cli.run_config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAIL = 2

COEFFICIENT_RENORMALIZE_TOL = 1e-6

CSV_HEADER = ['scheme', 'd', 'parties', 'local_dims', 'gram_dev',
              'basis_dev', 'superpos_dev', 'pass']


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == '-':
        sys.stdout.write(text)
        return
    with open(path, 'w', newline='\n') as f:
        f.write(text)


def _read(path: str) -> str:
    with open(path) as f:
        return f.read()


def _dump_json(data: Dict[str, Any], config: RunConfig) -> str:
    data = dict(data)
    data['run_config'] = config.to_json_dict()
    return json.dumps(data, indent=2) + '\n'


def _split_pair(spec: str) -> Tuple[str, str]:
    parts = spec.split(',')
    if len(parts) != 2 or not all(parts):
        raise ValueError(
            'Expected two comma-separated paths, got {!r}.'.format(spec))
    return parts[0], parts[1]


def _read_pair(spec: str) -> latin.MOLSPair:
    first, second = _split_pair(spec)
    return latin.MOLSPair.certify(latin.read_square(_read(first)),
                                  latin.read_square(_read(second)))


def build_masker(scheme: str,
                 d: Optional[int],
                 pair: Optional[str] = None) -> maskers.Masker:
    """Constructs the masker a command line asks for.

    Args:
        scheme: One of maskers.SCHEMES.
        d: The input dimension. Optional for shor (always 2) and for mols
            with a pair (taken from the pair).
        pair: For mols, comma-separated paths of the two square files.
            Without a pair, odd d uses the cyclic pair, d=6 is rejected
            and other even d search for one.

    Raises:
        ValueError: The combination is invalid or the construction fails.
    """
    if scheme == 'shor':
        if d not in (None, 2):
            raise ValueError('The shor scheme masks d=2 only, got d={}.'
                             .format(d))
        return maskers.shor_masker()
    if scheme == 'mols':
        if pair is not None:
            mols = _read_pair(pair)
            if d is not None and d != mols.order:
                raise ValueError('--d {} does not match the order {} of the '
                                 'pair.'.format(d, mols.order))
            return maskers.mols_masker(mols)
        if d is None:
            raise ValueError('The mols scheme needs --d or --pair.')
        if d % 2:
            return maskers.mols_masker(latin.cyclic_pair(d))
        if d == 6:
            # An exhaustive search of order 6 takes minutes and finds nothing.
            raise ValueError('No orthogonal pair of order 6 exists; use '
                             '--scheme embedded for d=6.')
        result = latin.mols_search(d)
        if result.pair is None:
            raise ValueError('No order {} pair for the mols scheme: {}.'
                             .format(d, result.verdict()))
        return maskers.mols_masker(result.pair)
    if d is None:
        raise ValueError('The {} scheme needs --d.'.format(scheme))
    if scheme == 'bell':
        return maskers.bell_masker(d)
    if scheme == 'embedded':
        return maskers.embedded_masker(d)
    raise ValueError('Unknown scheme {!r}; expected one of {}.'.format(
        scheme, ', '.join(maskers.SCHEMES)))


def parse_coefficients(text: str) -> List[complex]:
    """Parses comma-separated 're' or 're+imJ' literals.

    Raises:
        ValueError: A literal isn't a number.
    """
    result = []
    for token in text.split(','):
        token = token.strip().replace(' ', '')
        try:
            result.append(complex(token))
        except ValueError as ex:
            raise ValueError('Malformed coefficient {!r}.'.format(
                token)) from ex
    return result


def _input_state(config: RunConfig, d: int) -> maskers.InputState:
    if config.get('basis') is not None:
        return maskers.InputState.basis(d, config['basis'])
    if config.get('coeffs') is None:
        raise ValueError('Give either --coeffs or --basis.')
    coeffs = parse_coefficients(config['coeffs'])
    if len(coeffs) != d:
        raise ValueError('Expected {} coefficients, got {}.'.format(
            d, len(coeffs)))
    return maskers.InputState.from_coefficients(
        coeffs, renormalize_tol=COEFFICIENT_RENORMALIZE_TOL)


def cmd_mask(config: RunConfig) -> int:
    """Writes the encoding of an input, or the masker manifest."""
    masker = build_masker(config['scheme'], config.get('d'),
                          config.get('pair'))
    if config.get('manifest'):
        data = masker.manifest()
    else:
        x = _input_state(config, masker.input_dim)
        data = states.state_to_json_dict(maskers.encode(masker, x))
    _write(config.get('out'), _dump_json(data, config))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Writes a MaskingReport; exits 2 if it fails."""
    masker = build_masker(config['scheme'], config.get('d'),
                          config.get('pair'))
    report = verify.masking_check(masker,
                                  samples=config['samples'],
                                  seed=config['seed'],
                                  tol=config['tol'],
                                  diagnostic=config['diagnostic'])
    if config['format'] == 'csv':
        text = _csv_table([_csv_row(report)], config)
    else:
        text = _dump_json(report.to_json_dict(), config)
    _write(config.get('out'), text)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_latin_check(config: RunConfig) -> int:
    first = latin.read_square(_read(config['first']))
    second = latin.read_square(_read(config['second']))
    orthogonal = latin.are_orthogonal(first, second)
    sys.stdout.write('order: {}\n'.format(first.order))
    sys.stdout.write('distinct pairs: {}\n'.format(
        latin.distinct_pair_count(first, second)))
    sys.stdout.write('orthogonal: {}\n'.format(
        'true' if orthogonal else 'false'))
    return EXIT_OK if orthogonal else EXIT_FAIL


def _write_pair(pair: latin.MOLSPair, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(latin.write_square(pair.first) + '\n' +
                         latin.write_square(pair.second))
        return
    first, second = _split_pair(out)
    _write(first, latin.write_square(pair.first))
    _write(second, latin.write_square(pair.second))


def _cmd_latin_cyclic(config: RunConfig) -> int:
    _write_pair(latin.cyclic_pair(config['d']), config.get('out'))
    return EXIT_OK


def _cmd_latin_search(config: RunConfig) -> int:
    result = latin.mols_search(config['d'], node_budget=config['budget'])
    sys.stdout.write('order: {}\n'.format(result.order))
    sys.stdout.write('result: {}\n'.format(result.verdict()))
    sys.stdout.write('nodes={} squares_tried={}\n'.format(
        result.nodes, result.squares_tried))
    if result.pair is not None:
        _write_pair(result.pair, config.get('out'))
    return EXIT_OK


def cmd_latin(config: RunConfig) -> int:
    """Checks, constructs or searches for orthogonal Latin squares."""
    action = config.command.split(' ', 1)[1]
    if action == 'check':
        return _cmd_latin_check(config)
    if action == 'cyclic':
        return _cmd_latin_cyclic(config)
    if action == 'search':
        return _cmd_latin_search(config)
    raise ValueError('Unknown latin action {!r}.'.format(action))


def _csv_row(report: verify.MaskingReport) -> List[str]:
    return [report.scheme,
            str(report.d),
            str(report.parties),
            'x'.join(str(e) for e in report.local_dims),
            repr(report.gram_dev),
            repr(report.basis_dev),
            repr(report.superpos_dev),
            'true' if report.passed else 'false']


def _csv_table(rows: Sequence[Sequence[str]], config: RunConfig) -> str:
    out = io.StringIO()
    out.write('# {}\n'.format(config.to_json_line()))
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return out.getvalue()


def cmd_report(config: RunConfig) -> int:
    """Certifies every (scheme, d) cell and tabulates the results.

    Cells that cannot be constructed are marked ERROR. Exits 2 if any cell
    errs or fails.
    """
    rows = []
    entries = []  # type: List[Dict[str, Any]]
    ok = True
    for scheme in config['schemes']:
        for d in config['dims']:
            try:
                masker = build_masker(scheme, d)
            except (ValueError, EnvironmentError) as ex:
                logger.warning('Cannot build %s masker for d=%d: %s',
                               scheme, d, ex)
                ok = False
                rows.append([scheme, str(d), '', '', '', '', '', 'ERROR'])
                entries.append({'scheme': scheme, 'd': d, 'error': str(ex)})
                continue
            report = verify.masking_check(masker,
                                          samples=config['samples'],
                                          seed=config['seed'],
                                          tol=config['tol'],
                                          diagnostic=config['diagnostic'])
            ok = ok and report.passed
            rows.append(_csv_row(report))
            entries.append(report.to_json_dict())
    if config['format'] == 'csv':
        text = _csv_table(rows, config)
    else:
        text = _dump_json({'reports': entries}, config)
    _write(config.get('out'), text)
    return EXIT_OK if ok else EXIT_FAIL
