"""Random square subsets drawn with the 9-box weights, and their audit.

Sampling uses numpy's PCG64 bit generator.  For each square in row-major
order one integer ``u`` is drawn uniformly from 0..47 and the square is kept
iff ``u < 48 * weight``; since every weight is a multiple of 1/48 this
realises the inclusion probability exactly, with no float comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .board import check_size, line_of_value, value_grids
from .weighting import UNIT, weight_grid48

ROW_TARGET = Fraction(5, 6)
DIAGONAL_LIMIT = Fraction(119, 144)
DENSITY = Fraction(1, 120)


def make_rng(seed: int) -> np.random.Generator:
    if seed < 0 or seed >= 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True, eq=False)
class SquareSet:
    """A subset of the n x n board as a boolean mask indexed ``[i-1, j-1]``."""

    n: int
    mask: np.ndarray
    size: int = field(init=False)

    def __post_init__(self) -> None:
        if self.mask.shape != (self.n, self.n):
            raise ValueError(f"mask shape {self.mask.shape} does not match n={self.n}")
        mask = np.asarray(self.mask, dtype=bool)
        mask.setflags(write=False)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "size", int(mask.sum()))

    def __len__(self) -> int:
        return self.size

    def __contains__(self, sq) -> bool:
        i, j = sq
        return 1 <= i <= self.n and 1 <= j <= self.n and bool(self.mask[i - 1, j - 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareSet) and self.n == other.n and np.array_equal(self.mask, other.mask)

    @classmethod
    def full(cls, n: int) -> "SquareSet":
        return cls(n, np.ones((n, n), dtype=bool))

    @classmethod
    def empty(cls, n: int) -> "SquareSet":
        return cls(n, np.zeros((n, n), dtype=bool))

    @classmethod
    def from_squares(cls, n: int, squares) -> "SquareSet":
        mask = np.zeros((n, n), dtype=bool)
        for i, j in squares:
            mask[i - 1, j - 1] = True
        return cls(n, mask)


def sample_subset(n: int, seed: int, weights48: Optional[np.ndarray] = None) -> SquareSet:
    """Keep each square independently with probability equal to its weight.

    ``weights48`` overrides the inclusion probabilities (in 1/48 units).
    """
    n = check_size(n)
    w48 = weight_grid48(n) if weights48 is None else weights48
    u = make_rng(seed).integers(0, UNIT, size=(n, n), dtype=np.int64)
    return SquareSet(n, u < w48)


@dataclass
class LineDegrees:
    """|L & S| for every line L; each array is indexed like the line indices."""

    n: int
    rows: np.ndarray  # i-1
    cols: np.ndarray  # j-1
    plus_nd: np.ndarray  # k
    minus_nd: np.ndarray  # k
    refl: np.ndarray  # l-1
    refl_plus_part: np.ndarray  # l-1, squares with i + j = l
    by_value: np.ndarray  # diagonal value 1..3n (index 0 unused)


def line_degrees(s: SquareSet) -> LineDegrees:
    n = s.n
    plus_v, minus_v = value_grids(n)
    plus_counts = np.bincount(plus_v[s.mask], minlength=3 * n + 1)
    minus_counts = np.bincount(minus_v[s.mask], minlength=3 * n + 1)
    by_value = plus_counts + minus_counts
    return LineDegrees(
        n=n,
        rows=s.mask.sum(axis=1),
        cols=s.mask.sum(axis=0),
        plus_nd=by_value[2 * n + 1 :],
        minus_nd=by_value[1 : n + 1][::-1],
        refl=by_value[n + 1 : 2 * n + 1],
        refl_plus_part=plus_counts[n + 1 : 2 * n + 1],
        by_value=by_value,
    )


def within_row_window(degree: int, n: int) -> bool:
    """|degree - 5n/6| <= n^(-1/4) * 5n/6, decided in integers.

    Equivalent to n * (6 * degree - 5n)^4 <= (5n)^4.
    """
    return n * (6 * int(degree) - 5 * n) ** 4 <= (5 * n) ** 4


def ab_size(n: int) -> int:
    """Smallest integer size >= 119n/144."""
    return -((-119 * n) // 144)


@dataclass
class SampleStats:
    n: int
    size: int
    degrees: LineDegrees
    rows_cols_ok: bool
    diagonals_ok: bool
    density_ok: Optional[bool]
    row_col_extremes: tuple[int, int]
    worst_diagonal: tuple[str, int]
    diagonal_limit: Fraction
    ab_size: int
    ab_checked: int
    ab_min_count: Optional[int]
    density_threshold: Fraction

    @property
    def degree_conditions_ok(self) -> bool:
        return self.rows_cols_ok and self.diagonals_ok

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "rows_cols_ok": self.rows_cols_ok,
            "diagonals_ok": self.diagonals_ok,
            "density_ok": self.density_ok,
            "row_col_min": self.row_col_extremes[0],
            "row_col_max": self.row_col_extremes[1],
            "row_col_target": _render(ROW_TARGET * self.n),
            "worst_diagonal": self.worst_diagonal[0],
            "worst_diagonal_degree": self.worst_diagonal[1],
            "diagonal_limit": _render(self.diagonal_limit),
            "ab_size": self.ab_size,
            "ab_pairs_checked": self.ab_checked,
            "ab_min_count": self.ab_min_count,
            "density_threshold": _render(self.density_threshold),
        }


def _render(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def check_subset(s: SquareSet, ab_trials: int = 20, seed: int = 0) -> SampleStats:
    """Audit the three subset properties on ``s``.

    Row/column degrees and diagonal degrees are checked on every line.  The
    A x B density property is checked on ``ab_trials`` random pairs of
    ``ab_size(n)``-sets plus the prefix and suffix pairs; pass ``ab_trials <
    0`` to skip it (``density_ok`` is then ``None``).
    """
    n = s.n
    deg = line_degrees(s)
    rc = np.concatenate([deg.rows, deg.cols])
    rows_cols_ok = all(within_row_window(d, n) for d in (rc.min(), rc.max()))

    limit = DIAGONAL_LIMIT * n
    diag = deg.by_value[1:]
    worst = int(np.argmax(diag)) + 1
    diagonals_ok = 144 * int(diag.max()) <= 119 * n

    m = ab_size(n)
    density_ok = None
    checked = 0
    min_count = None
    if ab_trials >= 0 and m <= n:
        rng = make_rng(seed)
        idx = np.arange(n)
        pairs = [(idx[:m], idx[:m]), (idx[n - m :], idx[n - m :])]
        for _ in range(ab_trials):
            pairs.append((np.sort(rng.choice(n, m, replace=False)), np.sort(rng.choice(n, m, replace=False))))
        counts = [int(s.mask[np.ix_(a, b)].sum()) for a, b in pairs]
        checked = len(counts)
        min_count = min(counts)
        density_ok = 120 * min_count >= n * n

    return SampleStats(
        n=n,
        size=s.size,
        degrees=deg,
        rows_cols_ok=bool(rows_cols_ok),
        diagonals_ok=bool(diagonals_ok),
        density_ok=density_ok,
        row_col_extremes=(int(rc.min()), int(rc.max())),
        worst_diagonal=(str(line_of_value(worst, n)), int(diag.max())),
        diagonal_limit=limit,
        ab_size=m,
        ab_checked=checked,
        ab_min_count=min_count,
        density_threshold=DENSITY * n * n,
    )


def expected_size(n: int) -> Fraction:
    """E|S|: the total weight of the board."""
    return Fraction(int(weight_grid48(n).sum()), UNIT)


def row_window(n: int) -> tuple[float, float]:
    """Approximate (low, high) of the row/column window, for display only."""
    t = n ** -0.25 * 5 * n / 6
    return 5 * n / 6 - t, 5 * n / 6 + t

