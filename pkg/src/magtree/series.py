"""Truncated power series with exact rational coefficients, and the tree-count
sequences together with their logarithmic derivatives."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .trees import as_bound, c_bounded


class Series:
    """A power series truncated at degree ``nmax``; coefficients are Fractions.

    Binary operations truncate to the smaller of the two operand truncations,
    so precision loss is always explicit in the result's ``nmax``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = cs

    @property
    def nmax(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, nmax: int) -> "Series":
        return cls([0] * (nmax + 1))

    @classmethod
    def one(cls, nmax: int) -> "Series":
        return cls([1] + [0] * nmax)

    @classmethod
    def t(cls, nmax: int) -> "Series":
        if nmax < 1:
            raise ValueError("nmax must be >= 1 to hold t")
        return cls([0, 1] + [0] * (nmax - 1))

    @classmethod
    def from_coefficients(cls, coeffs, nmax: int | None = None) -> "Series":
        cs = list(coeffs)
        if nmax is not None:
            cs = (cs + [0] * (nmax + 1))[: nmax + 1]
        return cls(cs)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.nmax:
            raise IndexError(f"coefficient index {n} beyond truncation {self.nmax}")
        return self.coeffs[n]

    def truncate(self, nmax: int) -> "Series":
        if nmax > self.nmax:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: nmax + 1])

    def __eq__(self, other):
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _common(self, other) -> int:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {other!r}")
        return min(self.nmax, other.nmax)

    def __add__(self, other):
        m = self._common(other)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(m + 1)])

    def __sub__(self, other):
        m = self._common(other)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(m + 1)])

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def scale(self, r) -> "Series":
        r = Fraction(r)
        return Series([r * c for c in self.coeffs])

    def __mul__(self, other):
        m = self._common(other)
        out = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if a == 0:
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out)

    def derivative(self) -> "Series":
        if self.nmax == 0:
            return Series([0])
        return Series([i * self.coeffs[i] for i in range(1, self.nmax + 1)])

    def integrate(self) -> "Series":
        """Antiderivative with zero constant term, truncated at nmax + 1."""
        out = [Fraction(0)] * (self.nmax + 2)
        for i, c in enumerate(self.coeffs):
            out[i + 1] = Fraction(c, i + 1)
        return Series(out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def reciprocal_onep(f: Series) -> Series:
    """1/(1 + f) for f with zero constant term."""
    if f.coeffs[0] != 0:
        raise ValueError("reciprocal_onep requires a zero constant term")
    n = f.nmax
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for k in range(1, n + 1):
        out[k] = -sum(f.coeffs[j] * out[k - j] for j in range(1, k + 1))
    return Series(out)


def log1p(f: Series) -> Series:
    """log(1 + f) for f with zero constant term."""
    if f.coeffs[0] != 0:
        raise ValueError("log1p requires a zero constant term")
    # d/dt log(1+f) = f'/(1+f); integrate back, constant term 0
    g = f.derivative() * reciprocal_onep(f.truncate(f.nmax))
    return g.integrate().truncate(f.nmax)


def sqrt1p(f: Series) -> Series:
    """sqrt(1 + f) for f with zero constant term, by Newton iteration."""
    if f.coeffs[0] != 0:
        raise ValueError("sqrt1p requires a zero constant term")
    n = f.nmax
    one_plus = Series.one(n) + f
    s = Series.one(n)
    # each step doubles the number of correct coefficients
    steps = 0
    while (1 << steps) <= n:
        steps += 1
    for _ in range(steps):
        s = (s + one_plus * reciprocal_onep(s - Series.one(n))).scale(Fraction(1, 2))
    return s


def compose(f: Series, g: Series) -> Series:
    """f(g(t)) for g with zero constant term (Horner evaluation)."""
    if g.coeffs[0] != 0:
        raise ValueError("series composition requires g(0) = 0")
    m = min(f.nmax, g.nmax)
    ft = f.coeffs[: m + 1]
    acc = Series.zero(m)
    for c in reversed(ft):
        acc = acc * g.truncate(m) + Series([c] + [0] * m)
    return acc


class LogDerived(NamedTuple):
    values: tuple[Fraction, ...]
    integral: bool


def log_derive_sequence(seq) -> LogDerived:
    """Coefficients of t * d/dt log(1 + sum a_n t^n) for a sequence a_1..a_m.

    Returns the derived values a'_1..a'_m and whether they are all integers.
    """
    a = [Fraction(v) for v in seq]
    m = len(a)
    if m < 1:
        raise ValueError("need at least one sequence entry")
    f = Series([0] + a)
    g = f.derivative() * reciprocal_onep(f.truncate(m - 1) if m > 1 else Series([0]))
    # a'_n = coefficient of t^(n-1) in g
    vals = tuple(g.coeffs[n - 1] for n in range(1, m + 1))
    return LogDerived(vals, all(v.denominator == 1 for v in vals))


def bounded_tree_counts(bound, nmax: int) -> list[int]:
    """The counts c[N]_1..c[N]_nmax of arity-bounded reduced planar trees."""
    b = as_bound(bound)
    return [c_bounded(b, n) for n in range(1, nmax + 1)]


def c_prime_sequence(bound, nmax: int) -> list[int]:
    """Logarithmic derivation of the bounded tree counts; always integral."""
    derived = log_derive_sequence(bounded_tree_counts(bound, nmax))
    if not derived.integral:
        raise ArithmeticError("log-derived tree counts must be integers")
    return [int(v) for v in derived.values]


def c_prime(bound, n: int) -> int:
    if n < 1:
        raise ValueError("log-derived counts are indexed from 1")
    return c_prime_sequence(bound, n)[n - 1]


def operad_generating_series(bound, nmax: int) -> Series:
    """Sum over n of (dimension of the n-ary part / n!) t^n; the coefficients
    are the bounded tree counts since every n-ary part is c[N]_n regular pieces."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    return Series([0] + bounded_tree_counts(bound, nmax))


def prim_generating_series(bound, nmax: int) -> Series:
    """Generating series of the primitive sub-operad: coefficients c[N]'_n / n."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    cp = c_prime_sequence(bound, nmax)
    return Series([0] + [Fraction(cp[n - 1], n) for n in range(1, nmax + 1)])


def generators_from_catalan(bound, nmax: int) -> list[Fraction]:
    """Degree-n generator counts e[N]_n solving c(t) = 1/(1 - e(t)) - 1."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    c = operad_generating_series(bound, nmax)
    e = Series.one(nmax) - reciprocal_onep(c)
    return list(e.coeffs[1:])


def catalan_closed_form(nmax: int) -> Series:
    """(1 - sqrt(1 - 4t)) / 2, the binary tree count series."""
    minus4t = Series.from_coefficients([0, -4], nmax)
    return (Series.one(nmax) - sqrt1p(minus4t)).scale(Fraction(1, 2))


def super_catalan_closed_form(nmax: int) -> Series:
    """(1 + t - sqrt(1 - 6t + t^2)) / 4, the reduced planar tree count series."""
    inner = Series.from_coefficients([0, -6, 1], nmax)
    return (Series.from_coefficients([1, 1], nmax) - sqrt1p(inner)).scale(Fraction(1, 4))


def prim_closed_form(bound, nmax: int) -> Series:
    """The closed-form primitive series log(1 + c(t)) built from the square
    roots, available for the binary and the unbounded operad."""
    b = as_bound(bound)
    if b.value == 2:
        return log1p(catalan_closed_form(nmax))
    if b.is_omega:
        return log1p(super_catalan_closed_form(nmax))
    raise ValueError("closed forms are available for bound 2 and omega only")
