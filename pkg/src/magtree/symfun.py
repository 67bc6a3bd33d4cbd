"""Symmetric functions in the power-sum basis: symmetric-group characters by
border-strip recursion, the plethystic logarithm, the primitive-characteristic
formula, Schur decompositions, and the multigraded Witt dimension count."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import series as _series
from .trees import as_bound

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts) -> Partition:
    t = tuple(parts)
    if not is_partition(t):
        raise ValueError(f"{parts!r} is not a partition (weakly decreasing positive parts)")
    return t


def partitions(n: int):
    """All partitions of n in reverse lexicographic order, starting at (n,)."""
    if n == 0:
        yield ()
        return
    if n < 0:
        return

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def z_lambda(lam) -> int:
    """Centralizer order of a permutation of cycle type lam."""
    lam = as_partition(lam)
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part**m * factorial(m)
    return out


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError("mobius is defined on positive integers")
    out = 1
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def _mn(mu: Partition, lam: Partition) -> int:
    """Character value by border-strip removal on beta-numbers."""
    if not lam:
        return 1 if not mu else 0
    strip = lam[0]
    rest = lam[1:]
    r = len(mu)
    betas = [mu[i] + (r - 1 - i) for i in range(r)]
    beta_set = set(betas)
    total = 0
    for i, b in enumerate(betas):
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for other in betas if nb < other < b)
        new = sorted((betas[:i] + [nb] + betas[i + 1 :]), reverse=True)
        newmu = tuple(v - (r - 1 - j) for j, v in enumerate(new))
        newmu = tuple(p for p in newmu if p > 0)
        total += (-1) ** height * _mn(newmu, rest)
    return total


def mn_character(mu, lam) -> int:
    """Irreducible character of the symmetric group: value of chi^mu at cycle type lam."""
    mu = as_partition(mu)
    lam = as_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"weight mismatch: |{mu}| != |{lam}|")
    # process the largest strips first; order does not change the value but
    # keeps the recursion shallow
    return _mn(mu, tuple(sorted(lam, reverse=True)))


def specht_dimension(mu) -> int:
    """Dimension of the irreducible labeled by mu, by the hook length product."""
    mu = as_partition(mu)
    n = sum(mu)
    if n == 0:
        return 1
    conj = [0] * mu[0]
    for p in mu:
        for j in range(p):
            conj[j] += 1
    out = factorial(n)
    for i, p in enumerate(mu):
        for j in range(p):
            out //= p - j + conj[j] - i - 1
    return out


class SymFunc:
    """A finite rational combination of power-sum monomials p_lambda."""

    __slots__ = ("terms",)

    def __init__(self, terms, validate: bool = True):
        acc: dict[Partition, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            if validate:
                lam = as_partition(lam)
            if lam in acc:
                acc[lam] += c
            else:
                acc[lam] = c
        self.terms = {
            lam: acc[lam] for lam in sorted(acc, key=lambda l: (sum(l), l)) if acc[lam] != 0
        }

    def items(self):
        return self.terms.items()

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(as_partition(lam), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def weight_part(self, n: int) -> "SymFunc":
        return SymFunc(
            {lam: c for lam, c in self.terms.items() if sum(lam) == n}, validate=False
        )

    def truncate_weight(self, max_weight: int) -> "SymFunc":
        return SymFunc(
            {lam: c for lam, c in self.terms.items() if sum(lam) <= max_weight},
            validate=False,
        )

    def homogeneous_weight(self) -> int | None:
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError(f"not homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        acc = dict(self.terms)
        for lam, c in other.terms.items():
            acc[lam] = acc.get(lam, Fraction(0)) + c
        return SymFunc(acc, validate=False)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SymFunc({lam: -c for lam, c in self.terms.items()}, validate=False)

    def scale(self, r) -> "SymFunc":
        r = Fraction(r)
        if r == 0:
            return SymFunc({}, validate=False)
        return SymFunc({lam: r * c for lam, c in self.terms.items()}, validate=False)

    def __rmul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    def mul(self, other: "SymFunc", max_weight: int | None = None) -> "SymFunc":
        """Product in the power-sum basis: p_lambda p_mu = p_(sorted merge)."""
        acc: dict[Partition, Fraction] = {}
        for l1, c1 in self.terms.items():
            w1 = sum(l1)
            for l2, c2 in other.terms.items():
                if max_weight is not None and w1 + sum(l2) > max_weight:
                    continue
                lam = tuple(sorted(l1 + l2, reverse=True))
                acc[lam] = acc.get(lam, Fraction(0)) + c1 * c2
        return SymFunc(acc, validate=False)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return self.mul(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def power(self, k: int, max_weight: int | None = None) -> "SymFunc":
        out = one()
        for _ in range(k):
            out = out.mul(self, max_weight)
        return out

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __str__(self):
        return format_power_sums(self)

    def __repr__(self):
        return f"<symfunc {self}>"


def zero_sf() -> SymFunc:
    return SymFunc({}, validate=False)


def one() -> SymFunc:
    return SymFunc({(): 1}, validate=False)


def p(k: int) -> SymFunc:
    if k < 1:
        raise ValueError("power sums are indexed from 1")
    return SymFunc({(k,): 1}, validate=False)


def p_of(lam) -> SymFunc:
    return SymFunc({as_partition(lam): 1})


def _format_terms(terms, symbol) -> str:
    if not terms:
        return "0"
    parts = []
    for i, (lam, c) in enumerate(terms):
        body = f"{abs(c)}*{symbol}[{','.join(str(v) for v in lam)}]"
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{' - ' if c < 0 else ' + '}{body}")
    return "".join(parts)


def format_power_sums(f: SymFunc) -> str:
    return _format_terms(list(f.items()), "p")


def format_schur(coeffs: dict[Partition, Fraction]) -> str:
    ordered = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return _format_terms([(lam, c) for lam, c in ordered if c != 0], "s")


def plethysm_power(d: int, f: SymFunc) -> SymFunc:
    """The ring map sending p_k to p_(d k), applied to f."""
    if d < 1:
        raise ValueError("plethysm by power sums is indexed from 1")
    if d == 1:
        return f
    return SymFunc(
        {tuple(d * part for part in lam): c for lam, c in f.terms.items()}, validate=False
    )


def sf_log(f: SymFunc, max_weight: int) -> SymFunc:
    """The plethystic logarithm of 1 + f, truncated by weight:
    sum over d >= 1 of mu(d)/d times log(1 + p_d o f)."""
    if 0 in f.weights():
        raise ValueError("the plethystic log needs a positive-weight argument")
    f = f.truncate_weight(max_weight)
    total = zero_sf()
    for d in range(1, max_weight + 1):
        md = mobius(d)
        if md == 0:
            continue
        fd = plethysm_power(d, f).truncate_weight(max_weight)
        if fd.is_zero:
            continue
        # log(1 + fd) = sum (-1)^(n+1)/n fd^n
        powe = one()
        logsum = zero_sf()
        n = 1
        while n * d <= max_weight:
            powe = powe.mul(fd, max_weight)
            if powe.is_zero:
                break
            logsum = logsum + powe.scale(Fraction((-1) ** (n + 1), n))
            n += 1
        total = total + logsum.scale(Fraction(md, d))
    return total.truncate_weight(max_weight)


def ch_operad(bound, max_weight: int) -> SymFunc:
    """Characteristic of the whole operad: sum of c[N]_k p_1^k."""
    counts = _series.bounded_tree_counts(bound, max_weight)
    return SymFunc(
        {tuple([1] * k): counts[k - 1] for k in range(1, max_weight + 1)}, validate=False
    )


def ch_prim(n: int, bound) -> SymFunc:
    """Characteristic of the arity-n primitives:
    (1/n) sum over d | n of mu(d) c[N]'_(n/d) p_d^(n/d)."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    b = as_bound(bound)
    cp = _series.c_prime_sequence(b, n)
    acc: dict[Partition, Fraction] = {}
    for d in range(1, n + 1):
        if n % d:
            continue
        md = mobius(d)
        if md == 0:
            continue
        q = n // d
        lam = tuple([d] * q)
        acc[lam] = acc.get(lam, Fraction(0)) + Fraction(md * cp[q - 1], n)
    return SymFunc(acc, validate=False)


def to_schur(f: SymFunc) -> dict[Partition, Fraction]:
    """Schur expansion of a homogeneous symmetric function, through characters."""
    n = f.homogeneous_weight()
    if n is None:
        return {}
    out: dict[Partition, Fraction] = {}
    for mu in partitions(n):
        coeff = Fraction(0)
        for lam, c in f.items():
            coeff += c * mn_character(mu, lam)
        if coeff:
            out[mu] = coeff
    return out


def character_to_symfunc(values: dict[Partition, int | Fraction]) -> SymFunc:
    """The symmetric function of a class function: sum of chi(lam)/z_lam p_lam."""
    return SymFunc(
        {as_partition(lam): Fraction(v, z_lambda(lam)) for lam, v in values.items()}
    )


def rank_morphism(f: SymFunc, nmax: int) -> _series.Series:
    """Send p_1 to t and every higher power sum to 0."""
    coeffs = [Fraction(0)] * (nmax + 1)
    for lam, c in f.items():
        if all(part == 1 for part in lam) and len(lam) <= nmax:
            coeffs[len(lam)] += c
    return _series.Series(coeffs)


def _multinomial(total: int, parts) -> int:
    out = factorial(total)
    for v in parts:
        out //= factorial(v)
    return out


def witt_multigraded(n_vec, r_vec) -> int:
    """Multigraded dimension of the binary-operad primitives on generators of
    unit multidegree: (1/|n|) sum over k d = n of
    mu(k) c'_|d| multinomial(|d|; d) prod r_i^d_i."""
    n_vec = tuple(int(v) for v in n_vec)
    r_vec = tuple(int(v) for v in r_vec)
    if len(n_vec) != len(r_vec):
        raise ValueError("multidegree and generator-count vectors differ in length")
    if any(v < 0 for v in n_vec) or not any(n_vec):
        raise ValueError("the multidegree must be a nonzero vector of nonnegative integers")
    if any(v < 1 for v in r_vec):
        raise ValueError("generator counts must be positive")
    total = sum(n_vec)
    cp = _series.c_prime_sequence(2, total)
    acc = Fraction(0)
    for k in range(1, total + 1):
        if any(v % k for v in n_vec):
            continue
        mk = mobius(k)
        if mk == 0:
            continue
        d = tuple(v // k for v in n_vec)
        size = sum(d)
        term = mk * cp[size - 1] * _multinomial(size, d)
        for r, di in zip(r_vec, d):
            term *= r**di
        acc += term
    out = Fraction(acc, total)
    if out.denominator != 1:
        raise ArithmeticError(f"Witt count came out non-integral: {out}")
    return int(out)
