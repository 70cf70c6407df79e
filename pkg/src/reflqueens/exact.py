"""Exhaustive search for reflecting n-queens configurations at small n.

The search places queens row by row, columns ascending, so solutions come
out in lexicographic order of ``cols``.  ``count`` is practical up to about
n = 18; ``solve_first`` reaches somewhat further.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .board import InvalidInput, check_size
from .config import Configuration, is_valid

NAIVE_MAX_N = 10


@dataclass(frozen=True)
class OccupancyState:
    """Columns and diagonal lines already used by the queens placed so far.

    ``lines`` is a bitset over diagonal values 1..3n (bit ``v``), which
    packs the four families side by side: minus non-reflecting diagonals at
    values 1..n, reflecting diagonals at n+1..2n and plus non-reflecting
    diagonals at 2n+1..3n.  A queen at (i, j) sets bits ``n+i+j`` and
    ``n+j-i``; both constituents of a reflecting diagonal land on the same
    bit, so using one blocks the other.
    """

    n: int
    row: int = 0
    columns: int = 0
    lines: int = 0

    def free_columns(self) -> int:
        """Bitmask (bit j-1 for column j) of safe columns in the next row."""
        n, i = self.n, self.row + 1
        blocked = self.columns | (self.lines >> (n + i + 1)) | (self.lines >> (n - i + 1))
        return ~blocked & ((1 << n) - 1)

    def place(self, j: int) -> "OccupancyState":
        n, i = self.n, self.row + 1
        return OccupancyState(
            n, i, self.columns | (1 << (j - 1)), self.lines | (1 << (n + i + j)) | (1 << (n + j - i))
        )

    def _family(self, lo: int, hi: int) -> set[int]:
        return {v for v in range(lo, hi + 1) if self.lines >> v & 1}

    @property
    def minus_nd(self) -> set[int]:
        return {self.n - v for v in self._family(1, self.n)}

    @property
    def reflecting(self) -> set[int]:
        return {v - self.n for v in self._family(self.n + 1, 2 * self.n)}

    @property
    def plus_nd(self) -> set[int]:
        return {v - 2 * self.n - 1 for v in self._family(2 * self.n + 1, 3 * self.n)}


def _search(state: OccupancyState, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    n = state.n
    full = (1 << n) - 1
    cols = prefix + [0] * (n - len(prefix))
    start = state.row

    def rec(i: int, colmask: int, linemask: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(cols)
            return
        free = ~(colmask | (linemask >> (n + i + 1)) | (linemask >> (n - i + 1))) & full
        while free:
            bit = free & -free
            free ^= bit
            j = bit.bit_length()
            cols[i - 1] = j
            yield from rec(i + 1, colmask | bit, linemask | (1 << (n + i + j)) | (1 << (n + j - i)))

    yield from rec(start + 1, state.columns, state.lines)


def _count(state: OccupancyState) -> int:
    n = state.n
    full = (1 << n) - 1

    def rec(i: int, colmask: int, linemask: int) -> int:
        free = ~(colmask | (linemask >> (n + i + 1)) | (linemask >> (n - i + 1))) & full
        if i == n:
            return 1 if free else 0
        total = 0
        while free:
            bit = free & -free
            free ^= bit
            j = bit.bit_length()
            total += rec(i + 1, colmask | bit, linemask | (1 << (n + i + j)) | (1 << (n + j - i)))
        return total

    if state.row == n:
        return 1
    return rec(state.row + 1, state.columns, state.lines)


def _first_row_states(n: int) -> list[OccupancyState]:
    return [OccupancyState(n).place(j) for j in range(1, n + 1)]


def iter_solutions(n: int) -> Iterator[Configuration]:
    """All reflecting configurations of size n in lexicographic order."""
    n = check_size(n)
    for cols in _search(OccupancyState(n), []):
        yield Configuration(n, cols)


def _collect(args: tuple[OccupancyState, int]) -> list[tuple[int, ...]]:
    state, j = args
    return list(_search(state, [j]))


def enumerate_solutions(
    n: int,
    visitor: Optional[Callable[[Configuration], None]] = None,
    limit: Optional[int] = None,
    workers: int = 1,
) -> int:
    """Call ``visitor`` on each solution (at most ``limit``); return how many.

    With ``workers > 1`` the first-row choices are searched in separate
    processes and solutions are only visited once a branch is complete, so
    visiting order is lexicographic only in single-worker mode.
    """
    n = check_size(n)
    if limit is not None and limit <= 0:
        return 0
    visited = 0
    if workers <= 1:
        for sol in iter_solutions(n):
            if visitor is not None:
                visitor(sol)
            visited += 1
            if limit is not None and visited >= limit:
                break
        return visited
    jobs = [(s, j) for j, s in enumerate(_first_row_states(n), start=1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for branch in pool.map(_collect, jobs):
            for cols in branch:
                if visitor is not None:
                    visitor(Configuration(n, cols))
                visited += 1
                if limit is not None and visited >= limit:
                    return visited
    return visited


def count(n: int, workers: int = 1) -> int:
    """Number of reflecting n-queens configurations."""
    n = check_size(n)
    states = _first_row_states(n)
    if workers <= 1:
        return sum(_count(s) for s in states)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count, states))


def solve_first(n: int) -> Optional[Configuration]:
    return next(iter_solutions(n), None)


def naive_count(n: int) -> int:
    """Count by filtering every permutation with the pairwise attack test.

    Shares nothing with the bitset search above; used as its oracle.
    """
    n = check_size(n)
    if n > NAIVE_MAX_N:
        raise InvalidInput(f"naive_count is limited to n <= {NAIVE_MAX_N} ({n}! permutations)")
    return sum(
        1 for perm in itertools.permutations(range(1, n + 1)) if is_valid(Configuration(n, perm))
    )
