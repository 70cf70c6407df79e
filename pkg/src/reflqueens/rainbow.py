"""Rows/columns bipartite graph with the 2-fold diagonal colouring.

An edge (i, j) is the square (i, j); its two colours are the plus-family and
minus-family diagonals through the square.  Perfect rainbow matchings of the
graph built from a square set S are exactly the reflecting configurations
whose queens all lie in S.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from .board import InvalidInput, LineId, ReflDiag, MinusDiag, PlusDiag, diagonal_value, value_grids
from .config import Configuration
from .sampler import SquareSet, make_rng


def edge_colors(i: int, j: int, n: int) -> tuple[LineId, LineId]:
    """(plus-family colour, minus-family colour) of edge {R_i, C_j}."""
    s = i + j - (n + 1)
    plus = PlusDiag(s) if 0 <= s <= n else ReflDiag(i + j)
    d = i - j
    minus = MinusDiag(d) if 0 <= d <= n else ReflDiag(j - i)
    return plus, minus


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """Bipartite graph on rows 1..n and columns 1..n with edge set S.

    Colours are kept as diagonal values (see :mod:`reflqueens.board`) in the
    arrays ``plus`` and ``minus``, indexed ``[i-1, j-1]``.
    """

    n: int
    squares: SquareSet
    plus: np.ndarray
    minus: np.ndarray

    @property
    def mask(self) -> np.ndarray:
        return self.squares.mask

    @property
    def num_edges(self) -> int:
        return self.squares.size

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.squares

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, j in zip(*np.nonzero(self.mask)):
            yield int(i) + 1, int(j) + 1

    def colors(self, i: int, j: int) -> tuple[LineId, LineId]:
        if not self.has_edge(i, j):
            raise InvalidInput(f"({i}, {j}) is not an edge")
        return edge_colors(i, j, self.n)


def build_graph(s: SquareSet) -> ColoredGraph:
    plus, minus = value_grids(s.n)
    return ColoredGraph(s.n, s, plus, minus)


def color_degrees(g: ColoredGraph) -> np.ndarray:
    """Degree of every colour, indexed by diagonal value (index 0 unused)."""
    size = 3 * g.n + 1
    return np.bincount(g.plus[g.mask], minlength=size) + np.bincount(g.minus[g.mask], minlength=size)


def color_degree(g: ColoredGraph, color: LineId) -> int:
    if not color.is_diagonal:
        raise InvalidInput(f"{color} is not a colour; only diagonals colour edges")
    return int(color_degrees(g)[diagonal_value(color, g.n)])


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    @classmethod
    def from_configuration(cls, c: Configuration) -> "Matching":
        return cls(tuple(c.squares()))

    def to_configuration(self, n: int) -> Configuration:
        cols = [0] * n
        for i, j in self.edges:
            cols[i - 1] = j
        return Configuration(n, tuple(cols))


def is_rainbow_perfect(g: ColoredGraph, m: Matching) -> bool:
    for i, j in m.edges:
        if not g.has_edge(i, j):
            raise InvalidInput(f"({i}, {j}) is not an edge of the graph")
    if len(m.edges) != g.n:
        return False
    rows = {i for i, _ in m.edges}
    cols = {j for _, j in m.edges}
    if len(rows) != g.n or len(cols) != g.n:
        return False
    colors = set()
    for i, j in m.edges:
        colors.update(edge_colors(i, j, g.n))
    return len(colors) == 2 * g.n


@dataclass(frozen=True)
class BoundednessReport:
    vertex_multiplicity: int
    pair_multiplicity: int

    @property
    def b(self) -> int:
        return max(self.vertex_multiplicity, self.pair_multiplicity)


def verify_bounded(g: ColoredGraph) -> BoundednessReport:
    """Count the worst colour repetition at a vertex and on a colour pair."""
    n = g.n
    size = 3 * n + 1
    vertex = 0
    for axis in (0, 1):
        for v in range(n):
            sel = g.mask[v] if axis == 0 else g.mask[:, v]
            if not sel.any():
                continue
            p = g.plus[v][sel] if axis == 0 else g.plus[:, v][sel]
            q = g.minus[v][sel] if axis == 0 else g.minus[:, v][sel]
            vertex = max(vertex, int(np.bincount(np.concatenate([p, q]), minlength=size).max()))
    p = g.plus[g.mask]
    q = g.minus[g.mask]
    pair = 0
    if p.size:
        key = np.minimum(p, q) * size + np.maximum(p, q)
        pair = int(np.unique(key, return_counts=True)[1].max())
    return BoundednessReport(vertex, pair)


@dataclass
class HypothesisReport:
    n: int
    alpha: Fraction
    d: Fraction
    eps: Optional[Fraction]
    vertex_degrees_ok: bool
    color_degrees_ok: bool
    density_ok: bool
    min_vertex_degree: int
    max_vertex_degree: int
    max_color_degree: int
    min_pair_edges: int
    pairs_checked: int

    @property
    def passed(self) -> bool:
        return self.vertex_degrees_ok and self.color_degrees_ok and self.density_ok


def _within(deg: int, d: Fraction, eps: Optional[Fraction], n: int) -> bool:
    if eps is None:
        # |deg - d| <= n^(-1/4) d  <=>  n (deg - d)^4 <= d^4
        return n * (deg - d) ** 4 <= d**4
    return (1 - eps) * d <= deg <= (1 + eps) * d


def verify_lemma_hypotheses(
    g: ColoredGraph,
    alpha: Fraction = Fraction(1, 120),
    d: Optional[Fraction] = None,
    eps: Optional[Fraction] = None,
    pair_trials: int = 20,
    seed: int = 0,
) -> HypothesisReport:
    """Check the three rainbow-matching hypotheses on a concrete graph.

    ``d`` defaults to 5n/6.  ``eps=None`` means n^(-1/4), compared exactly.
    The edge-density hypothesis is sampled: prefix, suffix and
    ``pair_trials`` random pairs of vertex sets of size ceil((1-alpha) d).
    """
    n = g.n
    alpha = Fraction(alpha)
    d = Fraction(5 * n, 6) if d is None else Fraction(d)
    eps = None if eps is None else Fraction(eps)
    deg = np.concatenate([g.mask.sum(axis=1), g.mask.sum(axis=0)])
    lo, hi = int(deg.min()), int(deg.max())
    vertex_ok = _within(lo, d, eps, n) and _within(hi, d, eps, n)
    max_color = int(color_degrees(g)[1:].max())
    color_ok = max_color <= (1 - alpha) * d

    m = (1 - alpha) * d
    m = max(0, -((-m.numerator) // m.denominator))
    counts = []
    if m <= n:
        rng = make_rng(seed)
        idx = np.arange(n)
        pairs = [(idx[:m], idx[:m]), (idx[n - m :], idx[n - m :])]
        for _ in range(pair_trials):
            pairs.append((rng.choice(n, m, replace=False), rng.choice(n, m, replace=False)))
        counts = [int(g.mask[np.ix_(a, b)].sum()) for a, b in pairs]
    # no vertex sets of size m exist when m > n: the hypothesis holds vacuously
    min_pair = min(counts) if counts else n * n
    return HypothesisReport(
        n=n,
        alpha=alpha,
        d=d,
        eps=eps,
        vertex_degrees_ok=bool(vertex_ok),
        color_degrees_ok=bool(color_ok),
        density_ok=bool(min_pair >= alpha * n * n),
        min_vertex_degree=lo,
        max_vertex_degree=hi,
        max_color_degree=max_color,
        min_pair_edges=min_pair,
        pairs_checked=len(counts),
    )


@dataclass(frozen=True)
class SearchParams:
    """Tuning knobs of the min-conflicts matcher."""

    sideways_prob: float = 0.3
    noise_prob: float = 0.02
    stagnation: int = 0  # steps without a new best before restart; 0 -> 50 n + 500
    max_restarts: int = 1000


@dataclass
class SearchStats:
    iterations: int = 0
    restarts: int = 0
    elapsed: float = 0.0
    best_cost: Optional[int] = None


def _random_perfect_matching(mask: np.ndarray, rng: np.random.Generator) -> Optional[np.ndarray]:
    """A perfect matching of the mask's bipartite graph, randomised, or None."""
    n = mask.shape[0]
    cost = np.where(mask, rng.random((n, n)), n + 1.0)
    rows, cols = linear_sum_assignment(cost)
    if not mask[rows, cols].all():
        return None
    return cols.astype(np.int64)


class _MinConflicts:
    """Swap-based min-conflicts over row -> column bijections inside S.

    Cost is the number of pairs of queens sharing a colour.  A step picks a
    random conflicted row and evaluates swapping its column with every other
    row's column in one vectorised pass, keeping both new squares in S.
    """

    def __init__(self, g: ColoredGraph, rng: np.random.Generator, params: SearchParams):
        self.n = g.n
        self.mask = g.mask
        self.P = np.ascontiguousarray(g.plus - 1)
        self.M = np.ascontiguousarray(g.minus - 1)
        self.rng = rng
        self.params = params
        self.rows = np.arange(self.n)

    def reset(self, cols: np.ndarray) -> None:
        self.cols = cols.copy()
        self.pc = self.P[self.rows, self.cols]
        self.mc = self.M[self.rows, self.cols]
        self.cnt = np.bincount(self.pc, minlength=3 * self.n) + np.bincount(self.mc, minlength=3 * self.n)
        self.cost = int((self.cnt * (self.cnt - 1) // 2).sum())

    def conflicted(self) -> np.ndarray:
        return np.flatnonzero((self.cnt[self.pc] > 1) | (self.cnt[self.mc] > 1))

    def deltas(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        cnt, pc, mc, cols = self.cnt, self.pc, self.mc, self.cols
        pi, mi, ci = pc[i], mc[i], cols[i]
        rem_i = cnt[pi] + cnt[mi] - 2

        def c1(x):  # counts after removing queen i
            return cnt[x] - (x == pi) - (x == mi)

        rem_j = c1(pc) + c1(mc) - 2
        npi = self.P[i, cols]
        nmi = self.M[i, cols]

        def c2(x):  # ... and queen j
            return c1(x) - (x == pc) - (x == mc)

        add_i = c2(npi) + c2(nmi)
        npj = self.P[:, ci]
        nmj = self.M[:, ci]

        def c3(x):  # ... then add queen i at column cols[j]
            return c2(x) + (x == npi) + (x == nmi)

        add_j = c3(npj) + c3(nmj)
        delta = add_i + add_j - rem_i - rem_j
        ok = self.mask[i, cols] & self.mask[:, ci]
        ok[i] = False
        return delta, ok

    def swap(self, i: int, j: int, delta: int) -> None:
        cnt = self.cnt
        for x in (self.pc[i], self.mc[i], self.pc[j], self.mc[j]):
            cnt[x] -= 1
        self.cols[i], self.cols[j] = self.cols[j], self.cols[i]
        for r in (i, j):
            self.pc[r] = self.P[r, self.cols[r]]
            self.mc[r] = self.M[r, self.cols[r]]
            cnt[self.pc[r]] += 1
            cnt[self.mc[r]] += 1
        self.cost += int(delta)

    def step(self) -> None:
        rng, params = self.rng, self.params
        conf = self.conflicted()
        i = int(conf[rng.integers(conf.size)])
        delta, ok = self.deltas(i)
        cand = np.flatnonzero(ok)
        if cand.size == 0:
            return
        if rng.random() < params.noise_prob:
            j = int(cand[rng.integers(cand.size)])
            self.swap(i, j, delta[j])
            return
        d = delta[cand]
        best = int(d.min())
        if best > 0 or (best == 0 and rng.random() >= params.sideways_prob):
            return
        ties = cand[d == best]
        j = int(ties[rng.integers(ties.size)])
        self.swap(i, j, best)


def find_rainbow_matching(
    g: ColoredGraph,
    seed: int = 0,
    max_iters: int = 200_000,
    time_limit: Optional[float] = None,
    params: SearchParams = SearchParams(),
    stats: Optional[SearchStats] = None,
) -> Optional[Matching]:
    """Search for a perfect rainbow matching; ``None`` means budget exhausted.

    ``max_iters`` counts search steps and is the deterministic budget;
    ``time_limit`` (seconds) is an additional wall-clock cap.  A returned
    matching has been checked with :func:`is_rainbow_perfect`.
    """
    stats = stats if stats is not None else SearchStats()
    start = time.perf_counter()
    n = g.n
    rng = make_rng(seed)
    first = _random_perfect_matching(g.mask, rng)
    if first is None:
        stats.elapsed = time.perf_counter() - start
        return None
    search = _MinConflicts(g, rng, params)
    search.reset(first)
    patience = params.stagnation or 50 * n + 500
    best = search.cost
    since_best = 0
    while search.cost > 0 and stats.iterations < max_iters:
        if time_limit is not None and stats.iterations % 64 == 0:
            if time.perf_counter() - start > time_limit:
                break
        search.step()
        stats.iterations += 1
        if search.cost < best:
            best, since_best = search.cost, 0
        else:
            since_best += 1
        if since_best > patience and stats.restarts < params.max_restarts:
            fresh = _random_perfect_matching(g.mask, rng)
            search.reset(fresh)
            best, since_best = search.cost, 0
            stats.restarts += 1
        stats.best_cost = best if stats.best_cost is None else min(stats.best_cost, best)
    stats.elapsed = time.perf_counter() - start
    if search.cost != 0:
        return None
    m = Matching(tuple((i + 1, int(search.cols[i]) + 1) for i in range(n)))
    if not is_rainbow_perfect(g, m):
        raise AssertionError("matcher produced an invalid matching")
    return m
