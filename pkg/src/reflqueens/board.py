"""The reflecting chessboard: squares, lines and the attack relation.

Rows and columns are numbered 1..n from the top-left corner; the reflecting
strip sits above row 1.  A square (i, j) lies on the plus-diagonal with sum
``i + j`` and the minus-diagonal with difference ``i - j``.  Diagonals whose
extension meets the strip are merged pairwise into reflecting diagonals.

Every diagonal line also has an integer *value* in 1..3n, the quantity that
appears in Slater's pairing formulation (``a_i + i`` or ``a_i - i`` with
``a_i = n + j``)::

    MinusDiag(k)  ->  n - k          (k = 0..n-1)
    ReflDiag(l)   ->  n + l          (l = 1..n)
    PlusDiag(k)   ->  2n + 1 + k     (k = 0..n-1)

A square (i, j) covers exactly the values ``n + i + j`` and ``n + j - i``.
"""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple

import numpy as np


class InvalidInput(ValueError):
    """Raised for out-of-range sizes, squares, lines or malformed placements."""


class LineKind(IntEnum):
    ROW = 0
    COL = 1
    PLUS = 2
    MINUS = 3
    REFL = 4


_KIND_NAMES = {
    LineKind.ROW: "Row",
    LineKind.COL: "Col",
    LineKind.PLUS: "PlusDiag",
    LineKind.MINUS: "MinusDiag",
    LineKind.REFL: "ReflDiag",
}
_NAME_KINDS = {v: k for k, v in _KIND_NAMES.items()}


class LineId(NamedTuple):
    kind: LineKind
    index: int

    def __str__(self) -> str:
        return f"{_KIND_NAMES[self.kind]}({self.index})"

    __repr__ = __str__

    @property
    def is_diagonal(self) -> bool:
        return self.kind >= LineKind.PLUS

    @classmethod
    def parse(cls, text: str) -> "LineId":
        """Inverse of ``str``: ``"ReflDiag(4)"`` -> ``LineId(REFL, 4)``."""
        name, _, rest = text.strip().partition("(")
        if name not in _NAME_KINDS or not rest.endswith(")"):
            raise InvalidInput(f"not a line identifier: {text!r}")
        return cls(_NAME_KINDS[name], int(rest[:-1]))


def Row(i: int) -> LineId:
    return LineId(LineKind.ROW, i)


def Col(j: int) -> LineId:
    return LineId(LineKind.COL, j)


def PlusDiag(k: int) -> LineId:
    return LineId(LineKind.PLUS, k)


def MinusDiag(k: int) -> LineId:
    return LineId(LineKind.MINUS, k)


def ReflDiag(ell: int) -> LineId:
    return LineId(LineKind.REFL, ell)


class Square(NamedTuple):
    i: int
    j: int


def check_size(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInput(f"board size must be a positive integer, got {n!r}")
    return int(n)


def check_square(sq: tuple[int, int], n: int) -> Square:
    i, j = sq
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidInput(f"square {tuple(sq)} is off the {n}x{n} board")
    return Square(int(i), int(j))


def check_line(line: LineId, n: int) -> LineId:
    kind, idx = line
    if kind in (LineKind.ROW, LineKind.COL, LineKind.REFL):
        ok = 1 <= idx <= n
    else:
        ok = 0 <= idx <= n - 1
    if not ok:
        raise InvalidInput(f"{line} is not a line of the {n}x{n} board")
    return LineId(LineKind(kind), int(idx))


def plus_line(i: int, j: int, n: int) -> LineId:
    k = i + j - (n + 1)
    return PlusDiag(k) if k >= 0 else ReflDiag(i + j)


def minus_line(i: int, j: int, n: int) -> LineId:
    k = i - j
    return MinusDiag(k) if k >= 0 else ReflDiag(j - i)


def lines_through(sq: tuple[int, int], n: int) -> frozenset[LineId]:
    """The four lines (row, column, two diagonals) containing ``sq``."""
    n = check_size(n)
    i, j = check_square(sq, n)
    return frozenset((Row(i), Col(j), plus_line(i, j, n), minus_line(i, j, n)))


def squares_of(line: LineId, n: int) -> list[Square]:
    """All squares on ``line`` in (i, j) order."""
    n = check_size(n)
    kind, idx = check_line(line, n)
    rng = range(1, n + 1)
    if kind == LineKind.ROW:
        return [Square(idx, j) for j in rng]
    if kind == LineKind.COL:
        return [Square(i, idx) for i in rng]
    if kind == LineKind.PLUS:
        s = idx + n + 1
        return [Square(i, s - i) for i in rng if 1 <= s - i <= n]
    if kind == LineKind.MINUS:
        return [Square(i, i - idx) for i in rng if 1 <= i - idx <= n]
    # plus part i + j = idx, minus part j - i = idx
    out = [Square(i, idx - i) for i in rng if 1 <= idx - i <= n]
    out += [Square(i, i + idx) for i in rng if 1 <= i + idx <= n]
    return sorted(out)


def attacks(a: tuple[int, int], b: tuple[int, int], n: int) -> bool:
    """True iff two distinct squares share a line of the reflecting board."""
    i, j = check_square(a, n)
    k, m = check_square(b, n)
    if (i, j) == (k, m):
        raise InvalidInput(f"a square does not attack itself: {(i, j)}")
    return (
        i == k
        or j == m
        or i + j == k + m
        or i - j == k - m
        or i + j == m - k
        or j - i == k + m
    )


def mirror_square(sq: tuple[int, int], n: int) -> Square:
    i, j = sq
    return Square(i, n + 1 - j)


def mirror_line(line: LineId, n: int) -> LineId:
    """Image of ``line`` under the reflection j -> n + 1 - j."""
    kind, idx = check_line(line, n)
    if kind == LineKind.COL:
        return Col(n + 1 - idx)
    if kind == LineKind.PLUS:
        return MinusDiag(idx)
    if kind == LineKind.MINUS:
        return PlusDiag(idx)
    if kind == LineKind.REFL:
        return ReflDiag(n + 1 - idx)
    return line


def diagonal_value(line: LineId, n: int) -> int:
    """The 1..3n value of a diagonal line (see module docstring)."""
    kind, idx = check_line(line, n)
    if kind == LineKind.MINUS:
        return n - idx
    if kind == LineKind.REFL:
        return n + idx
    if kind == LineKind.PLUS:
        return 2 * n + 1 + idx
    raise InvalidInput(f"{line} is not a diagonal")


def line_of_value(value: int, n: int) -> LineId:
    if 1 <= value <= n:
        return MinusDiag(n - value)
    if n < value <= 2 * n:
        return ReflDiag(value - n)
    if 2 * n < value <= 3 * n:
        return PlusDiag(value - 2 * n - 1)
    raise InvalidInput(f"value {value} out of range 1..{3 * n}")


def diagonal_lines(n: int) -> list[LineId]:
    """All 3n diagonal lines, ordered by value."""
    return [line_of_value(v, n) for v in range(1, 3 * n + 1)]


def value_grids(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-square diagonal values as two (n, n) arrays, 0-based ``[i-1, j-1]``.

    The first holds the value of the plus-family line, the second of the
    minus-family line.  Values are 1..3n, so they index a length-3n+1 array.
    """
    idx = np.arange(1, n + 1)
    i, j = np.meshgrid(idx, idx, indexing="ij")
    return n + i + j, n + j - i
