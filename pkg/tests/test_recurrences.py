from math import comb

import pytest

from rgsavoid.avoid import count_avoiders, count_avoiders_by_blocks, fasc_triangle
from rgsavoid.recurrences import (ArityMismatch, binomial_transform, bounded_blocks_series,
                                  quartic, quartic_binomial, expand_F_a, fib_shifted,
                                  first_block_pair, h_successor, incr_avoider_series, triangle_a,
                                  triangle_b, triangle_c, nc12321, one_a_two_one_b,
                                  one_plus_n_pow, quadratic_pow2, partial_binomial_sum, recurrence_eval, incr_and_tau_series)
from rgsavoid.matching import tau112, tau121
from rgsavoid.series import Series, rational

N = 11


def test_binomial_transform():
    base = count_avoiders(["111", "123"], N)
    out = recurrence_eval("binomial_transform", base, N)
    assert out == count_avoiders(["1222", "1234"], N)
    m = [n - 1 for n in range(1, N + 1)]
    assert list(out[1:]) == [1 + k + 2 * comb(k, 2) + 3 * comb(k, 3) + 3 * comb(k, 4) for k in m]


def test_one_a_two_one_b():
    base = count_avoiders(["1211", "123"], N)
    assert one_a_two_one_b(base, 4, N) == count_avoiders(["1211", "1234"], N)
    base = count_avoiders(["1121", "12"], N)
    assert one_a_two_one_b(base, 4, N) == count_avoiders(["1121", "123"], N)
    # the size-3 member of the family
    base = count_avoiders(["121", "12"], N)
    assert one_a_two_one_b(base, 3, N) == count_avoiders(["121", "123"], N)


def test_first_block_pair():
    for pair, t, t2 in ((["1112", "1121"], ["111"], ["1222"]), (["1121", "1211"], ["12"], ["123"])):
        want = count_avoiders(pair + t2, N)
        out = first_block_pair(count_avoiders(pair + t, N), want[:4], N)
        assert out == want


def test_h_successor():
    x = Series.x(N)
    h112 = (1 - x) / (1 - 2 * x)
    h1223 = h_successor(h112)
    assert h1223 == 1 + x * (1 - 3 * x + 3 * x * x) / ((1 - 2 * x) ** 2 * (1 - x))
    assert h1223.integers() == tuple(count_avoiders(["1213", "1223"], N))
    h123 = Series(count_avoiders(["1213", "123"], N))
    assert h_successor(h123).integers() == tuple(count_avoiders(["1213", "1234"], N))


def test_triangles_match_enumeration():
    n = 10
    assert triangle_a(n) == fasc_triangle("A", n).nonzero()
    assert triangle_b(n) == fasc_triangle("B", n).nonzero()
    assert triangle_c(n) == fasc_triangle("C", n).nonzero()
    a, b, c = triangle_a(n), triangle_b(n), triangle_c(n)
    assert (a[4, 3, 2], a[4, 3, 3], b[5, 3, 3], c[5, 3, 3]) == (2, 3, 4, 3)


def test_incr_avoiders():
    for m in (1, 2, 3):
        assert incr_avoider_series(m, N).integers() == tuple(count_avoiders([list(range(1, m + 2))], N))


def test_incr_and_tau_against_counts():
    cases = {(2, 3): ["112", "121", "122"], (2, 4): ["1112", "1212", "1222"],
             (3, 4): ["1213", "1233"], (3, 5): ["12311", "12333"], (4, 5): ["12314", "12344"]}
    for (m, k), taus in cases.items():
        s = incr_and_tau_series(m, k, N).integers()
        for tau in taus:
            assert s == tuple(count_avoiders([list(range(1, m + 2)), tau], N)), (m, k, tau)
    with pytest.raises(ArityMismatch):
        incr_and_tau_series(1, 3)


def test_bounded_blocks():
    for k in (2, 3, 4, 5):
        assert bounded_blocks_series(k, N).integers() == tuple(count_avoiders(["123", "1" * k], N))


def test_F_a_bivariate():
    for a in [(1,), (2,), (1, 2), (2, 1), (3, 1, 1), (1, 1, 1, 1), (4,), (2, 1, 2)]:
        f = expand_F_a(a, 9)
        by = count_avoiders_by_blocks(["112", tau112(a)], 9)
        for n in range(10):
            for k in range(n + 1):
                assert f.coefficient(n, k) == by.get((n, k), 0), (a, n, k)
        by = count_avoiders_by_blocks(["121", tau121(a)], 9)
        assert all(f.coefficient(n, k) == v for (n, k), v in by.items())


def test_F_a_univariate_rows():
    x = Series.x(N)
    s = expand_F_a((1,), N).at_y(1)
    assert s.integers() == (1,) + (0,) * N
    s = expand_F_a((1, 1, 1, 1), N).at_y(1)
    assert s == sum((x / (1 - x)) ** i for i in range(4))
    assert expand_F_a((4,), N).at_y(1) == rational([1], [[1, -1, -1, -1]], N)


def test_closed_forms():
    assert quartic(5) == 32 == quartic_binomial(5)
    assert [quartic(n) for n in range(N)] == [quartic_binomial(n) for n in range(N)]
    assert list(count_avoiders(["1211", "1234"], N)[1:]) == [quartic(n) for n in range(1, N + 1)]
    assert [one_plus_n_pow(n) for n in range(1, 7)] == [1, 2, 5, 13, 33, 81]
    assert list(count_avoiders(["1123", "1234"], N)[2:]) == [quadratic_pow2(n) for n in range(2, N + 1)]
    assert [nc12321(n) for n in range(6)] == [1, 1, 2, 5, 14, 41]
    assert [fib_shifted(n) for n in range(7)] == [1, 1, 2, 5, 13, 34, 89]
    for k in (3, 4, 5):
        assert [partial_binomial_sum(n, k) for n in range(N)] == list(count_avoiders(["122", "1" * k], N - 1))
        assert [partial_binomial_sum(n, k) for n in range(N)] == list(count_avoiders(["122", list(range(1, k + 1))], N - 1))


def test_recurrence_eval_arity():
    with pytest.raises(ArityMismatch):
        recurrence_eval("binomial_transform", [1, 1])
    with pytest.raises(ArityMismatch):
        recurrence_eval("binomial_transform", [1, 1], 5)
    with pytest.raises(ValueError):
        recurrence_eval("nope", 1)
    assert recurrence_eval("lma", 5) == triangle_a(5)
