"""Truncated power series with exact rational coefficients.

A :class:`Series` stores the coefficients it knows, x^0 .. x^(len-1).
Every operation returns only the coefficients it can determine exactly, so
precision shrinks honestly (e.g. dividing by x drops one term).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

DEFAULT_ORDER = 16


class SeriesError(ArithmeticError):
    pass


class DivisionByZeroConstantTerm(SeriesError):
    pass


class SqrtNonSquareConstant(SeriesError):
    pass


class ComposeNonZeroConstant(SeriesError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _rational_sqrt(q: Fraction) -> Fraction:
    if q <= 0:
        raise SqrtNonSquareConstant(f"constant term {q} has no positive square root")
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise SqrtNonSquareConstant(f"constant term {q} is not a rational square")
    return Fraction(num, den)


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(_frac(c) for c in coeffs)

    # constructors
    @classmethod
    def poly(cls, coeffs: Sequence, order: int = DEFAULT_ORDER) -> "Series":
        """Polynomial known exactly, padded/truncated to ``order + 1`` terms."""
        cs = list(coeffs)[: order + 1]
        return cls(cs + [0] * (order + 1 - len(cs)))

    @classmethod
    def const(cls, c, order: int = DEFAULT_ORDER) -> "Series":
        return cls.poly([c], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls.poly([0, 1], order)

    @property
    def order(self) -> int:
        """Highest exponent whose coefficient is known."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"only {len(self)} coefficients known, asked for {order + 1}")
        return Series(self.coeffs[: order + 1])

    def integers(self) -> tuple[int, ...]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise SeriesError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return tuple(out)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # arithmetic
    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.const(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(len(self), len(other))
        return Series(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __radd__ = __add__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = _frac(other)
            return Series(c * a for a in self.coeffs)
        n = min(len(self), len(other))
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Series):
            c = _frac(other)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return Series(a / c for a in self.coeffs)
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(self._coerce(other), self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise SeriesError("only non-negative integer powers")
        out = Series.const(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sqrt(self):
        return series_sqrt(self)

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_div(a: Series, b: Series) -> Series:
    """a / b.

    When b starts with x^v (v > 0), a must start with x^v too; both are
    shifted down first and v coefficients of precision are lost.
    """
    v = b.valuation()
    if v is None:
        raise DivisionByZeroConstantTerm("divisor is zero to known precision")
    if v:
        va = a.valuation()
        if va is not None and va < v:
            raise DivisionByZeroConstantTerm(
                f"divisor has zero constant term (x^{v} factor) not present in numerator")
        a = Series(a.coeffs[v:])
        b = Series(b.coeffs[v:])
    n = min(len(a), len(b))
    inv0 = 1 / b.coeffs[0]
    bc = b.coeffs
    q: list[Fraction] = []
    for i in range(n):
        s = a.coeffs[i]
        for j in range(1, i + 1):
            if bc[j]:
                s -= bc[j] * q[i - j]
        q.append(s * inv0)
    return Series(q)


def series_sqrt(a: Series) -> Series:
    """Square root with positive constant term."""
    if not len(a):
        return a
    r0 = _rational_sqrt(a.coeffs[0])
    n = len(a)
    r = [r0]
    two_r0 = 2 * r0
    for i in range(1, n):
        s = a.coeffs[i]
        for j in range(1, i):
            s -= r[j] * r[i - j]
        r.append(s / two_r0)
    return Series(r)


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(x)); inner must have zero constant term."""
    if inner.coeffs and inner.coeffs[0] != 0:
        raise ComposeNonZeroConstant("inner series must have zero constant term")
    n = min(len(outer), len(inner))
    inner = Series(inner.coeffs[:n])
    out = Series([0] * n)
    # Horner from the top coefficient down
    for c in reversed(outer.coeffs[:n]):
        out = out * inner + Series.const(c, n - 1)
    return out


# --- bivariate ----------------------------------------------------------

def _padd(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _peval(p, y):
    s = Fraction(0)
    for c in reversed(p):
        s = s * y + c
    return s


class BiSeries:
    """Series in x whose coefficients are polynomials in y.

    ``coeffs[i]`` is a tuple of Fractions: the y-polynomial multiplying x^i.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Iterable]):
        out = []
        for poly in coeffs:
            poly = [_frac(c) for c in poly]
            while poly and poly[-1] == 0:
                poly.pop()
            out.append(tuple(poly))
        self.coeffs = tuple(out)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], order: int = DEFAULT_ORDER) -> "BiSeries":
        """Polynomial given as {(x-exponent, y-exponent): coefficient}."""
        rows: list[dict[int, int]] = [dict() for _ in range(order + 1)]
        for (i, j), c in terms.items():
            if i <= order:
                rows[i][j] = rows[i].get(j, 0) + c
        return cls([[r.get(j, 0) for j in range(max(r, default=-1) + 1)] for r in rows])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"BiSeries({self.coeffs!r})"

    def coefficient(self, i: int, j: int) -> Fraction:
        row = self.coeffs[i]
        return row[j] if j < len(row) else Fraction(0)

    def __add__(self, other):
        n = min(len(self), len(other))
        return BiSeries(_padd(p, q) for p, q in zip(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self):
        return BiSeries(tuple(-c for c in p) for p in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            c = _frac(other)
            return BiSeries(tuple(c * a for a in p) for p in self.coeffs)
        n = min(len(self), len(other))
        out = [()] * n
        for i in range(n):
            if self.coeffs[i]:
                for j in range(n - i):
                    out[i + j] = _padd(out[i + j], _pmul(self.coeffs[i], other.coeffs[j]))
        return BiSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other: "BiSeries") -> "BiSeries":
        """Division by a series whose x^0 coefficient is a nonzero constant."""
        c0 = other.coeffs[0] if other.coeffs else ()
        if len(c0) != 1:
            raise DivisionByZeroConstantTerm("x^0 coefficient of divisor must be a nonzero constant")
        inv = 1 / c0[0]
        n = min(len(self), len(other))
        q: list[tuple] = []
        for i in range(n):
            s = self.coeffs[i]
            for j in range(1, i + 1):
                if other.coeffs[j]:
                    s = _padd(s, _pmul((-1,), _pmul(other.coeffs[j], q[i - j])))
            q.append(tuple(inv * c for c in s))
        return BiSeries(q)

    def at_y(self, y) -> Series:
        y = _frac(y)
        return Series(_peval(p, y) for p in self.coeffs)


# --- prefix expressions ---------------------------------------------------
#
# Recipes for algebraic generating functions are written as prefix
# s-expressions over polynomial atoms, e.g. the Catalan series is
#     (/ (- [1] (sqrt [1,-4])) [0,2])
# Atoms: "[c0,c1,...]" (a polynomial), an integer or "p/q", or "x".
# Operators: + - * / (any arity >= 1), sqrt, ^ (integer exponent),
# compose (outer inner).

_SEXP_TOKEN = re.compile(r"\s*(\(|\)|\[[^\]]*\]|[^\s()\[\]]+)")


class ExpressionError(ValueError):
    pass


def parse_sexpr(text: str):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _SEXP_TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"cannot tokenize {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def read(i):
        if i >= len(tokens):
            raise ExpressionError("unexpected end of expression")
        t = tokens[i]
        if t == "(":
            items = []
            i += 1
            while i < len(tokens) and tokens[i] != ")":
                node, i = read(i)
                items.append(node)
            if i >= len(tokens):
                raise ExpressionError("missing ')'")
            if not items or not isinstance(items[0], str):
                raise ExpressionError("empty or headless list")
            return items, i + 1
        if t == ")":
            raise ExpressionError("unexpected ')'")
        return t, i + 1

    node, end = read(0)
    if end != len(tokens):
        raise ExpressionError("trailing tokens")
    return node


def _atom(tok: str, order: int) -> Series:
    if tok == "x":
        return Series.x(order)
    if tok.startswith("["):
        body = tok[1:-1].strip()
        coeffs = [Fraction(c) for c in body.split(",")] if body else []
        return Series.poly(coeffs, order)
    try:
        return Series.const(Fraction(tok), order)
    except ValueError:
        raise ExpressionError(f"bad atom {tok!r}") from None


def _eval(node, order: int) -> Series:
    if isinstance(node, str):
        return _atom(node, order)
    op, *args = node
    if op == "^":
        if len(args) != 2 or not isinstance(args[1], str) or not args[1].isdigit():
            raise ExpressionError("(^ base k) needs a literal non-negative exponent")
        return _eval(args[0], order) ** int(args[1])
    vals = [_eval(a, order) for a in args]
    if op == "+":
        out = vals[0]
        for v in vals[1:]:
            out = out + v
        return out
    if op == "-":
        if len(vals) == 1:
            return -vals[0]
        out = vals[0]
        for v in vals[1:]:
            out = out - v
        return out
    if op == "*":
        out = vals[0]
        for v in vals[1:]:
            out = out * v
        return out
    if op == "/":
        out = vals[0]
        for v in vals[1:]:
            out = out / v
        return out
    if op == "sqrt":
        if len(vals) != 1:
            raise ExpressionError("sqrt takes one argument")
        return vals[0].sqrt()
    if op == "compose":
        if len(vals) != 2:
            raise ExpressionError("compose takes (outer inner)")
        return series_compose(vals[0], vals[1])
    raise ExpressionError(f"unknown operator {op!r}")


def evaluate(expr, order: int = DEFAULT_ORDER, slack: int = 8) -> Series:
    """Expand a prefix expression (string or parsed tree) to x^order.

    Work is done at ``order + slack`` so that divisions by powers of x do
    not eat into the requested precision.
    """
    tree = parse_sexpr(expr) if isinstance(expr, str) else expr
    s = _eval(tree, order + slack)
    if s.order < order:
        raise SeriesError(f"expression lost too much precision ({s.order} < {order}); raise slack")
    return s.truncate(order)


def rational(num: Sequence, den_factors: Sequence[Sequence], order: int = DEFAULT_ORDER) -> Series:
    """num / prod(den_factors), all integer coefficient lists."""
    den = Series.const(1, order)
    for f in den_factors:
        den = den * Series.poly(f, order)
    return Series.poly(num, order) / den
