"""Counting recurrences and closed forms, evaluated exactly.

Each function here only does arithmetic.  The avoidance counts it is fed
and compared with come from :mod:`rgsavoid.avoid`.
"""

from __future__ import annotations

import inspect
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .avoid import CountVector, FascTriangle
from .compositions import Composition
from .series import BiSeries, Series, DEFAULT_ORDER


class ArityMismatch(TypeError):
    pass


# --- recurrences on count vectors --------------------------------------------

def binomial_transform(base: Sequence[int], max_n: int) -> CountVector:
    """p_n(T') = sum_k C(n-1, k) p_k(T), where T' = {1(t+1) : t in T}.

    ``base`` must hold p_0..p_{max_n-1} of T.
    """
    if len(base) < max_n:
        raise ArityMismatch(f"need {max_n} base terms, got {len(base)}")
    out = [1]
    for n in range(1, max_n + 1):
        out.append(sum(comb(n - 1, k) * base[k] for k in range(n)))
    return CountVector(out)


def one_a_two_one_b(base: Sequence[int], k: int, max_n: int) -> CountVector:
    """Counts for {1^a 2 1^b} u T' from counts for {1^a 2 1^b} u T.

    ``k`` is the size of 1^a 2 1^b; the result does not depend on a, b.
    """
    if k < 3:
        raise ArityMismatch("1^a 2 1^b must have size >= 3")
    if len(base) < max_n:
        raise ArityMismatch(f"need {max_n} base terms, got {len(base)}")
    out = [1]
    for n in range(1, max_n + 1):
        s = 0
        for i in range(1, n + 1):
            if i <= k - 2:
                s += base[n - i] * comb(n - 1, i - 1)
            else:
                s += base[n - i] * comb(n - i + k - 3, k - 3)
        out.append(s)
    return CountVector(out)


def first_block_pair(base: Sequence[int], initial: Sequence[int], max_n: int) -> CountVector:
    """a_n(T') = a_{n-1}(T) + (n-1) a_{n-2}(T) + a_{n-3}(T) + ... + a_0(T), n >= 4.

    Here a_n counts partitions avoiding T together with {1112, 1121} (or,
    with the same recurrence, {1121, 1211}).  ``initial`` supplies
    a_0..a_3 of T'.
    """
    if len(initial) < 4:
        raise ArityMismatch("need a_0..a_3 of T'")
    if len(base) < max_n:
        raise ArityMismatch(f"need {max_n} base terms, got {len(base)}")
    out = list(initial[: min(4, max_n + 1)])
    for n in range(4, max_n + 1):
        out.append(base[n - 1] + (n - 1) * base[n - 2] + sum(base[: n - 2]))
    return CountVector(out)


def h_successor(h_tau: Series) -> Series:
    """H_rho from H_tau for rho = 1(tau+1), tau ending above 1 (avoiding 1213 too)."""
    order = h_tau.order
    x = Series.x(order)
    one = Series.const(1, order)
    return one + x / (one - x) * h_tau + x * x / ((one - x) * (one - 2 * x)) * (h_tau - one)


# --- fasc triangles ---------------------------------------------------------

def triangle_a(max_n: int) -> FascTriangle:
    """a_{n,k,t} from its recurrence and the k = 2 base row."""
    a = FascTriangle("A")
    for n in range(2, max_n + 1):
        if n == 2:
            a[2, 2, 2] = 1
        else:
            for t in range(2, n + 1):
                if t == 2:
                    a[n, 2, t] = n - 2
                elif t == n:
                    a[n, 2, t] = 2
                else:
                    a[n, 2, t] = n - t + 1
        for k in range(3, n + 1):
            for t in range(2, n - k + 3):
                a[n, k, t] = a[n - 1, k - 1, t] + sum(
                    a[n - 2, k - 1, j] for j in range(t - 1, n - k + 2))
    return FascTriangle("A", a.nonzero())


def triangle_b(max_n: int) -> FascTriangle:
    """b_{n,k,t}: same recurrence as a, different k = 2 row."""
    base = {(2, 2, 2): 1, (3, 2, 2): 1, (3, 2, 3): 2,
            (4, 2, 2): 1, (4, 2, 3): 1, (4, 2, 4): 1}
    b = FascTriangle("B")
    for n in range(2, max_n + 1):
        for t in range(2, n + 1):
            b[n, 2, t] = base.get((n, 2, t), 0)
        for k in range(3, n + 1):
            for t in range(2, n - k + 3):
                b[n, k, t] = b[n - 1, k - 1, t] + sum(
                    b[n - 2, k - 1, j] for j in range(t - 1, n - k + 2))
    return FascTriangle("B", b.nonzero())


def triangle_c(max_n: int) -> FascTriangle:
    """c_{n,k,t}, built on top of b."""
    b = triangle_b(max_n)
    c = FascTriangle("C")
    for n in range(2, max_n + 1):
        if n == 2:
            c[2, 2, 2] = 1
        else:
            c[n, 2, 2] = n - 2
            c[n, 2, 3] = 1
        for k in range(3, n + 1):
            for t in range(2, n - k + 3):
                c[n, k, t] = b[n - 1, k - 1, t] + sum(
                    c[n - 1, k, j] for j in range(t, n - k + 2))
    return FascTriangle("C", c.nonzero())


# --- closed forms --------------------------------------------------------------

def incr_avoider_series(m: int, order: int = DEFAULT_ORDER) -> Series:
    """Generating function of partitions with at most m blocks."""
    x = Series.x(order)
    one = Series.const(1, order)
    total = Series.const(0, order)
    term = one
    for j in range(m + 1):
        if j:
            term = term * x / (one - j * x)
        total = total + term
    return total


def incr_and_tau_series(m: int, k: int, order: int = DEFAULT_ORDER) -> Series:
    """Counts of P_n(12...(m+1), tau) for tau of size k with m blocks and tau_i = i, i < m."""
    if m < 2 or k < m:
        raise ArityMismatch("need m >= 2 and k >= m")
    x = Series.x(order)
    one = Series.const(1, order)
    g = (x / (one - (m - 1) * x)) ** (k - m) * (x / (one - m * x))
    for j in range(1, m):
        g = g * (x / (one - j * x))
    return incr_avoider_series(m, order) - g


def bounded_blocks_series(k: int, order: int = DEFAULT_ORDER) -> Series:
    """1 + sum_{a=1}^{k-1} sum_{b=0}^{k-1} C(a+b-1, b) x^(a+b): avoiders of {123, 1^k}."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for a in range(1, k):
        for b in range(k):
            if a + b <= order:
                coeffs[a + b] += comb(a + b - 1, b)
    return Series(coeffs)


def expand_F_a(a: Composition, order: int = DEFAULT_ORDER) -> BiSeries:
    """F_a(x, y) = sum of p_{n,k}(112, tau112(a)) x^n y^k.

    Sum over j < len(a) of x^(a_1+..+a_j) y^j (1-x) / prod_{i<=j+1}(1 - x(1+y) + x^(a_i) y).
    """
    a = tuple(a)
    if not a:
        raise ArityMismatch("a must be nonempty")

    def poly(terms):
        return BiSeries.from_terms(terms, order)

    one_minus_x = poly({(0, 0): 1, (1, 0): -1})
    total = poly({})
    denom = poly({(0, 0): 1})
    prefix = 0
    for j in range(len(a)):
        ai = a[j]
        factor = {(0, 0): 1, (1, 0): -1, (1, 1): -1}
        factor[(ai, 1)] = factor.get((ai, 1), 0) + 1
        denom = denom * poly(factor)
        numer = poly({(prefix, j): 1}) * one_minus_x
        total = total + numer / denom
        prefix += ai
    return total


def quartic(n: int) -> int:
    """(n^4 - 6n^3 + 19n^2 - 22n + 16)/8 for n >= 1."""
    if n == 0:
        return 1
    v = Fraction(n ** 4 - 6 * n ** 3 + 19 * n ** 2 - 22 * n + 16, 8)
    assert v.denominator == 1
    return int(v)


def quartic_binomial(n: int) -> int:
    if n == 0:
        return 1
    m = n - 1
    return 1 + m + 2 * comb(m, 2) + 3 * comb(m, 3) + 3 * comb(m, 4)


def one_plus_n_pow(n: int) -> int:
    """1 + (n-1) 2^(n-2) for n >= 1."""
    if n == 0:
        return 1
    return 1 + (n - 1) * 2 ** (n - 2) if n >= 2 else 1


def quadratic_pow2(n: int) -> int:
    """2^(n-5) (n^2 - n + 14) for n >= 2."""
    if n < 2:
        return 1
    v = Fraction(2) ** (n - 5) * (n * n - n + 14)
    assert v.denominator == 1
    return int(v)


def partial_binomial_sum(n: int, k: int) -> int:
    """sum_{i=0}^{k-2} C(n-1, i) for n >= 1."""
    if n == 0:
        return 1
    return sum(comb(n - 1, i) for i in range(k - 1))


def nc12321(n: int) -> int:
    return 1 if n == 0 else (3 ** (n - 1) + 1) // 2


def fib_shifted(n: int) -> int:
    """F_{2n-2} with F_0 = F_1 = 1, i.e. 1, 1, 2, 5, 13, 34, ..."""
    if n == 0:
        return 1
    f0, f1 = 1, 1
    for _ in range(2 * n - 2):
        f0, f1 = f1, f0 + f1
    return f0


def sequence(fn: Callable[[int], int], max_n: int) -> CountVector:
    return CountVector(fn(n) for n in range(max_n + 1))


_KINDS = {
    "binomial_transform": binomial_transform,
    "one_a_two_one_b": one_a_two_one_b,
    "first_block_pair": first_block_pair,
    "h_successor": h_successor,
    "lma": triangle_a,
    "lmb": triangle_b,
    "lmc": triangle_c,
    "incr_and_tau": incr_and_tau_series,
}


def recurrence_eval(kind: str, *inputs):
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown recurrence {kind!r}") from None
    try:
        inspect.signature(fn).bind(*inputs)
    except TypeError as exc:
        raise ArityMismatch(f"{kind}: {exc}") from None
    return fn(*inputs)
