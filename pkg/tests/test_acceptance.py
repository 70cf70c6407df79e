"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints
one PASS/FAIL line per criterion (see conftest.py).
"""

import itertools
import time
from fractions import Fraction as F

import numpy as np
import pytest

from reflqueens import exact, pipeline, rainbow, sampler, weighting
from reflqueens.board import MinusDiag, PlusDiag, ReflDiag
from reflqueens.config import Configuration, is_valid, mirror, slater_is_valid, to_slater

# n = 1..9 frozen from naive_count; 10..14 from the bitset search
EXACT_COUNTS = {
    1: 1, 2: 0, 3: 0, 4: 2, 5: 4, 6: 0, 7: 2, 8: 10, 9: 32,
    10: 38, 11: 140, 12: 496, 13: 1186, 14: 3178,
}  # fmt: skip


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "existence table for n <= 14")
def test_c01_existence_table():
    start = time.perf_counter()
    counts = {n: exact.count(n) for n in range(1, 15)}
    assert time.perf_counter() - start < 150
    assert {n for n, c in counts.items() if c == 0} == {2, 3, 6}
    assert counts == EXACT_COUNTS


@criterion(2, "exact count equals naive oracle for n <= 9")
def test_c02_oracle_equivalence():
    start = time.perf_counter()
    for n in range(1, 10):
        assert exact.count(n) == exact.naive_count(n)
    assert time.perf_counter() - start < 30


@criterion(3, "weighting bounds n in [3, 10000], closed forms n in [6, 2000]")
def test_c03_weighting_lemma():
    start = time.perf_counter()
    failed = [n for n in range(3, 10_001) if not weighting.verify_bounds(n).passed]
    assert failed == []
    closed = [n for n in range(6, 2001) if not weighting.closed_form_check(n)]
    assert closed == []
    w = weighting.BOX_WEIGHTS
    assert 2 * w[0][0] + w[0][1] == 2 * w[1][0] + w[1][1] == 2 * w[2][0] + w[2][1] == F(5, 2)
    assert (w[0][0], w[0][1], w[1][0], w[1][1], w[2][0], w[2][1]) == (
        F(43, 48), F(17, 24), F(41, 48), F(19, 24), F(3, 4), F(1),
    )  # fmt: skip
    assert time.perf_counter() - start < 120


@criterion(4, "queens colouring is 2-bounded")
def test_c04_two_bounded():
    start = time.perf_counter()
    for n in range(1, 65):
        assert rainbow.verify_bounded(rainbow.build_graph(sampler.SquareSet.full(n))).b <= 2
    for seed in range(50):
        g = rainbow.build_graph(sampler.sample_subset(100, seed))
        assert rainbow.verify_bounded(g).b <= 2
    assert time.perf_counter() - start < 60


@criterion(5, "full-board colour degrees for n <= 256")
def test_c05_full_board_color_degrees():
    for n in range(1, 257):
        g = rainbow.build_graph(sampler.SquareSet.full(n))
        assert rainbow.color_degree(g, PlusDiag(0)) == n
        assert rainbow.color_degree(g, MinusDiag(0)) == n
        assert all(rainbow.color_degree(g, ReflDiag(ell)) == n - 1 for ell in range(1, n + 1))


@criterion(6, "sampler properties at n=2000 in >= 18 of 20 seeds")
def test_c06_sampler_statistics():
    n = 2000
    assert (1 - F(1, 120)) * F(5 * n, 6) == F(119 * n, 144)
    start = time.perf_counter()
    degree_ok = density_ok = 0
    worst = []
    for seed in range(20):
        stats = sampler.check_subset(sampler.sample_subset(n, seed), ab_trials=20, seed=seed)
        degree_ok += stats.rows_cols_ok and stats.diagonals_ok
        density_ok += bool(stats.density_ok)
        worst.append(stats.worst_diagonal[1])
    assert time.perf_counter() - start < 300
    print(f"degree conditions {degree_ok}/20, density {density_ok}/20, "
          f"heaviest diagonal {min(worst)}..{max(worst)} vs limit {float(F(119 * n, 144)):.1f}")  # fmt: skip
    assert density_ok >= 18
    assert degree_ok >= 18, f"conditions (1) and (2) held in only {degree_ok}/20 seeds"


@criterion(7, "inclusion rates match weights at n=9")
def test_c07_inclusion_unbiased():
    n, trials = 9, 10_000
    hits = np.zeros((n, n), dtype=np.int64)
    for seed in range(trials):
        hits += sampler.sample_subset(n, seed).mask
    rates = hits / trials
    target = weighting.weight_grid48(n) / 48
    assert np.abs(rates - target).max() <= 0.03


@criterion(8, "pipeline builds valid configurations for n in {50, 100, 500, 1000}")
@pytest.mark.parametrize("n", [50, 100, 500, 1000])
def test_c08_pipeline(n):
    start = time.perf_counter()
    res = pipeline.build_configuration(n)
    assert time.perf_counter() - start < 60
    assert res.found
    assert is_valid(res.configuration)
    assert slater_is_valid(to_slater(res.configuration))


@criterion(9, "Slater and rainbow-matching equivalences")
def test_c09_equivalences():
    for n in range(1, 9):
        for p in itertools.permutations(range(1, n + 1)):
            c = Configuration.of(p)
            assert is_valid(c) == slater_is_valid(to_slater(c))
    for n in range(1, 7):
        g = rainbow.build_graph(sampler.SquareSet.full(n))
        # perfect matchings of K_{n,n} are exactly the permutations
        rainbow_set = {
            p for p in itertools.permutations(range(1, n + 1))
            if rainbow.is_rainbow_perfect(g, rainbow.Matching(tuple(zip(range(1, n + 1), p))))
        }  # fmt: skip
        valid_set = {c.cols for c in exact.iter_solutions(n)}
        assert rainbow_set == valid_set
        assert all(rainbow.Matching.from_configuration(Configuration.of(p)).to_configuration(n).cols == p
                   for p in valid_set)  # fmt: skip


@criterion(10, "solution sets closed under mirroring for n <= 10")
def test_c10_mirror_closure():
    for n in range(1, 11):
        sols = {c.cols for c in exact.iter_solutions(n)}
        assert {mirror(Configuration(n, cols)).cols for cols in sols} == sols
