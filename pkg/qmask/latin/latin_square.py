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

"""Latin squares over the symbols 1..d and their text format."""

from typing import List, Optional, Sequence

import numpy as np


class SquareFormatError(ValueError):
    """A square is malformed: not square, or a symbol outside 1..d.

    Attributes:
        line: The 1-based line number of the problem when parsing text, else
            None.
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super().__init__(message)
        self.line = line


def _as_symbol_array(cells) -> np.ndarray:
    try:
        m = np.array(cells, dtype=np.int64)
    except (TypeError, ValueError) as ex:
        raise SquareFormatError('Cells are not an integer array: {}'.format(
            ex)) from ex
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise SquareFormatError(
            'Cells must form a non-empty square, got shape {}.'.format(
                m.shape))
    d = m.shape[0]
    if m.min() < 1 or m.max() > d:
        raise SquareFormatError(
            'Symbols must lie in 1..{}, got {!r}.'.format(d, m.tolist()))
    return m


def _rows_and_columns_are_permutations(m: np.ndarray) -> bool:
    d = m.shape[0]
    full = np.arange(1, d + 1)
    return (all(np.array_equal(np.sort(row), full) for row in m) and
            all(np.array_equal(np.sort(col), full) for col in m.T))


def is_latin(cells) -> bool:
    """Determines if every row and column is a permutation of 1..d.

    Args:
        cells: A d by d array of symbols in 1..d.

    Returns:
        Whether the cells form a Latin square.

    Raises:
        SquareFormatError: The array is not square, or a symbol is outside
            1..d.
    """
    return _rows_and_columns_are_permutations(_as_symbol_array(cells))


class LatinSquare:
    """An immutable Latin square of order d over the symbols 1..d.

    Cells are addressed 0-based through `cells` and 1-based through
    `symbol`, matching how the squares are usually written down.
    """

    def __init__(self, cells) -> None:
        """
        Args:
            cells: A d by d array of symbols in 1..d. It is copied.

        Raises:
            SquareFormatError: The array is malformed.
            ValueError: Some row or column repeats a symbol.
        """
        m = _as_symbol_array(cells)
        if not _rows_and_columns_are_permutations(m):
            raise ValueError('Not a Latin square: {!r}'.format(m.tolist()))
        m.flags.writeable = False
        self._cells = m

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> 'LatinSquare':
        return LatinSquare(rows)

    @property
    def order(self) -> int:
        return self._cells.shape[0]

    @property
    def cells(self) -> np.ndarray:
        """A read-only d by d view of the symbols, indexed 0-based."""
        return self._cells

    def rows(self) -> List[List[int]]:
        return self._cells.tolist()

    def symbol(self, j: int, k: int) -> int:
        """The symbol in row j, column k, both counted from 1."""
        if not (1 <= j <= self.order and 1 <= k <= self.order):
            raise IndexError('Cell ({}, {}) outside a square of order '
                             '{}.'.format(j, k, self.order))
        return int(self._cells[j - 1, k - 1])

    def transpose(self) -> 'LatinSquare':
        return LatinSquare(self._cells.T)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return np.array_equal(self._cells, other._cells)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((LatinSquare, self._cells.tobytes(), self.order))

    def __repr__(self):
        return 'qmask.LatinSquare({!r})'.format(self.rows())

    def __str__(self):
        return write_square(self).rstrip('\n')


def write_square(square: LatinSquare) -> str:
    """Rows in order, symbols separated by single spaces, trailing newline."""
    return ''.join(' '.join(str(e) for e in row) + '\n'
                   for row in square.rows())


def read_square(text: str) -> LatinSquare:
    """Parses a square written by write_square.

    Blank lines after the last row are ignored.

    Args:
        text: d lines of d whitespace-separated integers in 1..d.

    Returns:
        The parsed square.

    Raises:
        SquareFormatError: A line is malformed, has the wrong number of
            symbols, or holds a symbol outside 1..d; or the rows don't form a
            Latin square. The message names the offending line.
    """
    lines = text.split('\n')
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise SquareFormatError('Empty square text.', line=1)
    d = len(lines)
    rows = []
    for i, line in enumerate(lines, start=1):
        tokens = line.split()
        try:
            row = [int(token) for token in tokens]
        except ValueError as ex:
            raise SquareFormatError(
                'Expected integers, got {!r}.'.format(line), line=i) from ex
        if len(row) != d:
            raise SquareFormatError(
                'Expected {} symbols, got {}.'.format(d, len(row)), line=i)
        for symbol in row:
            if not 1 <= symbol <= d:
                raise SquareFormatError(
                    'Symbol {} out of range 1..{}.'.format(symbol, d),
                    line=i)
        rows.append(row)
    for i, row in enumerate(rows, start=1):
        if len(set(row)) != d:
            raise SquareFormatError('Row repeats a symbol.', line=i)
    for k in range(d):
        if len({row[k] for row in rows}) != d:
            raise SquareFormatError(
                'Column {} repeats a symbol.'.format(k + 1), line=d)
    return LatinSquare(rows)
