"""The free unitary algebra on labeled planar trees: sparse rational linear
combinations, generator application with the unit action, and substitution."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .trees import (
    EMPTY,
    ArityBound,
    LabeledTree,
    as_bound,
    graft,
    parse_tree_prefix,
    respects_bound,
    trees_with_label_multiset,
)


class BoundMismatchError(ValueError):
    """Operands carry different arity bounds; promote explicitly instead."""


def _check_same_bound(*elements) -> ArityBound:
    b = elements[0].bound
    for e in elements[1:]:
        if e.bound != b:
            raise BoundMismatchError(f"mixed arity bounds {b} and {e.bound}")
    return b


class Element:
    """A finite rational linear combination of labeled trees under one arity bound.

    Terms are stored without zeros and iterate in canonical tree order, so any
    matrix or text built from an element is reproducible.
    """

    __slots__ = ("terms", "bound")

    def __init__(self, terms, bound, validate: bool = True):
        bound = as_bound(bound)
        acc: dict[LabeledTree, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for t, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            if t in acc:
                acc[t] += c
            else:
                if validate:
                    if not isinstance(t, LabeledTree):
                        raise TypeError(f"{t!r} is not a LabeledTree")
                    if not respects_bound(t, bound):
                        raise ValueError(f"tree {t} violates arity bound {bound}")
                acc[t] = c
        self.terms = {t: acc[t] for t in sorted(acc) if acc[t] != 0}
        self.bound = bound

    def items(self):
        return self.terms.items()

    def support(self):
        return self.terms.keys()

    def coefficient(self, t: LabeledTree) -> Fraction:
        return self.terms.get(t, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(EMPTY, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """The common leaf count of all terms; None for zero, error if mixed."""
        degs = {t.degree for t in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def degrees(self) -> set[int]:
        return {t.degree for t in self.terms}

    def homogeneous_part(self, n: int) -> "Element":
        return Element(
            {t: c for t, c in self.terms.items() if t.degree == n}, self.bound, validate=False
        )

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        _check_same_bound(self, other)
        acc = dict(self.terms)
        for t, c in other.terms.items():
            acc[t] = acc.get(t, Fraction(0)) + c
        return Element(acc, self.bound, validate=False)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element({t: -c for t, c in self.terms.items()}, self.bound, validate=False)

    def scale(self, r) -> "Element":
        r = Fraction(r)
        if r == 0:
            return Element({}, self.bound, validate=False)
        return Element({t: r * c for t, c in self.terms.items()}, self.bound, validate=False)

    def __rmul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    def __mul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.bound == other.bound
            and self.terms == other.terms
        )

    def promote(self, new_bound) -> "Element":
        """Reinterpret inside a larger algebra; the inclusion must be legal."""
        new_bound = as_bound(new_bound)
        if not new_bound.includes(self.bound):
            raise BoundMismatchError(f"cannot promote from bound {self.bound} to {new_bound}")
        return Element(self.terms, new_bound, validate=False)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<element {self}>"


def format_rational(c: Fraction) -> str:
    return str(c)


def format_element(e: Element) -> str:
    if e.is_zero:
        return "0"
    parts = []
    for i, (t, c) in enumerate(e.terms.items()):
        mag = format_rational(abs(c))
        if i == 0:
            parts.append(f"-{mag}*{t}" if c < 0 else f"{mag}*{t}")
        else:
            parts.append(f"{' - ' if c < 0 else ' + '}{mag}*{t}")
    return "".join(parts)


def parse_element(text: str, bound) -> Element:
    """Parse the element literal format ``<rat>*<tree> [+|-] ...`` (and \"0\")."""
    bound = as_bound(bound)
    s = text.strip()
    if s == "0":
        return Element({}, bound)
    terms = []
    i = 0
    sign = 1
    if s.startswith("-"):
        sign = -1
        i = 1
    while True:
        j = i
        while j < len(s) and (s[j].isdigit() or s[j] == "/"):
            j += 1
        if j == i:
            raise ValueError(f"expected a rational coefficient at offset {i} in {text!r}")
        coeff = sign * Fraction(s[i:j])
        if j >= len(s) or s[j] != "*":
            raise ValueError(f"expected '*' at offset {j} in {text!r}")
        t, j = parse_tree_prefix(s, j + 1)
        terms.append((t, coeff))
        if j == len(s):
            break
        if s.startswith(" + ", j):
            sign, i = 1, j + 3
        elif s.startswith(" - ", j):
            sign, i = -1, j + 3
        else:
            raise ValueError(f"expected ' + ' or ' - ' at offset {j} in {text!r}")
    return Element(terms, bound)


def unit(bound) -> Element:
    return Element({EMPTY: 1}, bound, validate=False)


def zero(bound) -> Element:
    return Element({}, bound, validate=False)


def variable(k: int, bound) -> Element:
    return Element({LabeledTree(label=k): 1}, bound)


def from_tree(t: LabeledTree, bound) -> Element:
    return Element({t: 1}, bound)


def combine(pairs, bound=None) -> Element:
    """Rational linear combination of (coefficient, element) pairs."""
    pairs = list(pairs)
    if not pairs and bound is None:
        raise ValueError("cannot infer the bound of an empty combination")
    if bound is None:
        bound = pairs[0][1].bound
    bound = as_bound(bound)
    acc: dict[LabeledTree, Fraction] = {}
    for r, e in pairs:
        if e.bound != bound:
            raise BoundMismatchError(f"mixed arity bounds {bound} and {e.bound}")
        r = Fraction(r)
        if r == 0:
            continue
        for t, c in e.terms.items():
            acc[t] = acc.get(t, Fraction(0)) + r * c
    return Element(acc, bound, validate=False)


def combine_monomials(trees) -> LabeledTree:
    """Evaluate one generator application on tree monomials: drop the units,
    graft what is left, with one survivor passing through and none giving the unit."""
    alive = [t for t in trees if t.degree > 0]
    if not alive:
        return EMPTY
    if len(alive) == 1:
        return alive[0]
    return graft(alive)


def apply_generator(k: int, args) -> Element:
    """Apply the k-ary generator to k elements, multilinearly, with the unit
    action: unit arguments are dropped and the generator arity shrinks to match."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"generator arity must be an integer >= 2, got {k!r}")
    args = list(args)
    if len(args) != k:
        raise ValueError(f"expected {k} arguments, got {len(args)}")
    b = _check_same_bound(*args)
    if not b.allows(k):
        raise ValueError(f"arity {k} exceeds bound {b}")
    acc: dict[LabeledTree, Fraction] = {}
    for picks in product(*(a.terms.items() for a in args)):
        coeff = Fraction(1)
        for _, c in picks:
            coeff *= c
        key = combine_monomials(t for t, _ in picks)
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return Element(acc, b, validate=False)


def multilinear_basis(n: int, bound) -> list[LabeledTree]:
    """All trees with n leaves labeled bijectively by 1..n, canonically ordered."""
    if n < 1:
        raise ValueError("multilinear components are indexed from 1")
    return trees_with_label_multiset(range(1, n + 1), bound)


def is_multilinear(e: Element, n: int) -> bool:
    want = list(range(1, n + 1))
    return all(sorted(t.leaf_labels()) == want for t in e.terms)


def substitute(operation: Element, args) -> Element:
    """Replace the leaf labeled i by args[i-1] in every term, expanding
    multilinearly; the operation must use each of x1..xn exactly once."""
    args = list(args)
    n = len(args)
    if n < 1:
        raise ValueError("substitution needs at least one argument")
    b = _check_same_bound(*args)
    if operation.bound != b:
        raise BoundMismatchError(f"operation bound {operation.bound} differs from {b}")
    if not is_multilinear(operation, n):
        raise ValueError("operation is not multilinear in x1..xn")
    out = zero(b)
    for t, c in operation.items():
        out = out + _eval_tree(t, args).scale(c)
    return out


def _eval_tree(t: LabeledTree, args) -> Element:
    if t.label is not None:
        return args[t.label - 1]
    return apply_generator(len(t.children), [_eval_tree(c, args) for c in t.children])
