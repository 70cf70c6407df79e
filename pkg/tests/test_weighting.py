from fractions import Fraction as F

import pytest

from reflqueens import weighting as W
from reflqueens.board import Col, MinusDiag, PlusDiag, ReflDiag, Row

VALUES = {F(43, 48), F(17, 24), F(41, 48), F(19, 24), F(3, 4), F(1)}


def test_weight_examples():
    assert W.weight((1, 1), 9) == F(43, 48)
    assert W.weight((8, 5), 9) == 1
    assert W.weight((4, 4), 10) == F(19, 24)
    assert W.box_index((8, 5), 9) == 8
    assert W.box_index((4, 4), 10) == 5


def test_weight_matches_interval_definition():
    # direct reading of the six cases with exact fractions of n+1
    def reference(i, j, n):
        x, y = F(i, n + 1), F(j, n + 1)
        outer = y < F(1, 3) or y > F(2, 3)
        if x < F(1, 3):
            return F(43, 48) if outer else F(17, 24)
        if x <= F(2, 3):
            return F(41, 48) if outer else F(19, 24)
        return F(3, 4) if outer else F(1)

    for n in range(1, 40):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                w = W.weight((i, j), n)
                assert w == reference(i, j, n)
                assert w in VALUES and W.MIN_WEIGHT <= w <= W.MAX_WEIGHT
                assert w == W.weight((i, n + 1 - j), n)


def test_box_sizes():
    assert all(cell == (3, 3) for row in W.box_sizes(9) for cell in row)
    b10 = W.box_sizes(10)
    assert b10[1][1] == (4, 4) and b10[0][0] == (3, 3)
    b11 = W.box_sizes(11)
    assert b11[1][1] == (5, 5) and b11[0][0] == (3, 3) and b11[1][0] == (5, 3) and b11[0][1] == (3, 5)
    for n in range(1, 60):
        r = n % 3
        corner, mid = (n - r) // 3, (n + 2 * r) // 3
        sizes = W.box_sizes(n)
        if n >= 3:
            assert sizes[0][0] == sizes[2][2] == (corner, corner)
            assert sizes[1][0] == (mid, corner) and sizes[0][1] == (corner, mid)
            assert sizes[1][1] == (mid, mid)
        # box sizes agree with box_index membership
        counts = [[0] * 3 for _ in range(3)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                b = W.box_index((i, j), n) - 1
                counts[b // 3][b % 3] += 1
        assert counts == [[r_ * c_ for r_, c_ in row] for row in sizes]


def test_line_weight_examples():
    assert W.line_weight(Row(1), 9) == F(15, 2) == F(5 * 9, 6)
    assert W.line_weight(PlusDiag(0), 9) == F(117, 16) == F(13, 16) * 9
    assert W.line_weight(ReflDiag(3), 9) == F(311, 48) == F(59, 72) * 9 - F(43, 48)


@pytest.mark.parametrize("n", list(range(1, 45)) + [60, 61, 62])
def test_box_counting_matches_direct_sums(n):
    lw = W.line_weights48(n)
    f = lambda x: F(int(x), 48)
    for k in range(1, n + 1):
        assert f(lw.rows[k - 1]) == W.line_weight(Row(k), n)
        assert f(lw.cols[k - 1]) == W.line_weight(Col(k), n)
        assert f(lw.refl[k - 1]) == W.line_weight(ReflDiag(k), n)
    for k in range(n):
        assert f(lw.plus_nd[k]) == W.line_weight(PlusDiag(k), n)
        assert f(lw.minus_nd[k]) == W.line_weight(MinusDiag(k), n)


def test_box_column_identities():
    assert 2 * F(43, 48) + F(17, 24) == 2 * F(41, 48) + F(19, 24) == 2 * F(3, 4) + 1 == F(5, 2)
    assert W.box_column_identities()


@pytest.mark.parametrize("n", [3, 4, 5, 9, 10, 11, 100, 101, 102, 999])
def test_verify_bounds(n):
    rep = W.verify_bounds(n)
    assert rep.passed
    assert rep.max_nd_line in (PlusDiag(0), MinusDiag(0))
    assert rep.max_nd == F(13, 16) * n - F(n % 3, 48)
    assert rep.max_rd < F(59, 72) * n
    assert F(5 * n, 6) - F(10, 3) <= rep.min_row_col <= rep.max_row_col <= F(5 * n, 6) + F(10, 3)


def test_report_flags_follow_extrema():
    rep = W.verify_bounds(50)
    assert rep.nd_ok == (rep.max_nd < F(59, 72) * 50)
    assert rep.rd_ok == (rep.max_rd < F(59, 72) * 50)
    d = rep.to_dict()
    assert d["max_nd"] == f"{rep.max_nd.numerator}/{rep.max_nd.denominator}"
    assert d["max_nd_line"] == "PlusDiag(0)" and d["passed"] is True


@pytest.mark.parametrize("n", [6, 9, 30, 31, 50])
def test_plus_diagonal_chain(n):
    lw = W.line_weights48(n)
    plus = [F(int(x), 48) for x in lw.plus_nd]
    for k in range(1, n):
        assert plus[k] <= plus[k - 1] + 2 - 3 * F(17, 24)
        assert plus[k] < plus[k - 1]
    assert plus[0] == max(plus)
    assert list(lw.plus_nd) == list(lw.minus_nd)


def test_closed_form_examples():
    n9 = W.line_weights48(9)
    rd9 = [F(int(x), 48) for x in n9.refl]
    assert rd9[3:6] == [F(161, 24)] * 3
    assert rd9[1] == rd9[2] - F(1, 48) == F(310, 48)
    n11 = W.line_weights48(11)
    assert F(int(n11.refl[3]), 48) == F(int(n11.refl[7]), 48) == F(49, 6)


@pytest.mark.parametrize("n", range(6, 120))
def test_closed_form_check(n):
    rep = W.closed_form_report(n)
    assert rep.passed, rep
    # as-stated forms: the peak formula only for r = 0, the n - l symmetry never
    assert rep.peak_as_stated == (n % 3 == 0)
    assert not rep.symmetry_as_stated
