"""The Hopf structure on the free algebra: diagonal coproduct, coproduct
slices, the dual shuffle product, the basis pairing, and the binary co-operation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .trees import EMPTY, LabeledTree, as_bound, distinct_permutations, relabel, restrict_reduce, _shapes
from .freealg import Element, _check_same_bound, combine_monomials, from_tree, unit


def _pair_sort_key(pair):
    # left degree descending, then canonical on both components: matches the
    # conventional f (x) 1 + ... + 1 (x) f reading order
    left, right = pair
    return (-left.degree, left.sort_key(), right.sort_key())


class TensorElement:
    """A rational combination of ordered tree pairs, the codomain of coproducts."""

    __slots__ = ("terms", "bound")

    def __init__(self, terms, bound, validate: bool = True):
        bound = as_bound(bound)
        acc: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for pair, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            if validate and not (
                isinstance(pair, tuple)
                and len(pair) == 2
                and all(isinstance(t, LabeledTree) for t in pair)
            ):
                raise TypeError(f"{pair!r} is not a pair of trees")
            acc[pair] = acc.get(pair, Fraction(0)) + c
        self.terms = {p: acc[p] for p in sorted(acc, key=_pair_sort_key) if acc[p] != 0}
        self.bound = bound

    def items(self):
        return self.terms.items()

    def coefficient(self, left, right) -> Fraction:
        return self.terms.get((left, right), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        _check_same_bound(self, other)
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, Fraction(0)) + c
        return TensorElement(acc, self.bound, validate=False)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TensorElement({p: -c for p, c in self.terms.items()}, self.bound, validate=False)

    def scale(self, r) -> "TensorElement":
        r = Fraction(r)
        if r == 0:
            return TensorElement({}, self.bound, validate=False)
        return TensorElement(
            {p: r * c for p, c in self.terms.items()}, self.bound, validate=False
        )

    def __rmul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.bound == other.bound
            and self.terms == other.terms
        )

    def swap(self) -> "TensorElement":
        return TensorElement(
            {(b, a): c for (a, b), c in self.terms.items()}, self.bound, validate=False
        )

    def bihomogeneous_part(self, left_degree: int, right_degree: int) -> "TensorElement":
        return TensorElement(
            {
                (a, b): c
                for (a, b), c in self.terms.items()
                if a.degree == left_degree and b.degree == right_degree
            },
            self.bound,
            validate=False,
        )

    def left_slice(self, left: LabeledTree) -> Element:
        """The element paired with ``left`` in the first tensor factor."""
        return Element(
            {b: c for (a, b), c in self.terms.items() if a == left},
            self.bound,
            validate=False,
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, ((a, b), c) in enumerate(self.terms.items()):
            mag = str(abs(c))
            body = f"{mag}*{a}#{b}"
            if i == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{' - ' if c < 0 else ' + '}{body}")
        return "".join(parts)

    def __repr__(self):
        return f"<tensor {self}>"


def tensor(e1: Element, e2: Element) -> TensorElement:
    b = _check_same_bound(e1, e2)
    return TensorElement(
        {
            (t1, t2): c1 * c2
            for t1, c1 in e1.items()
            for t2, c2 in e2.items()
        },
        b,
        validate=False,
    )


@lru_cache(maxsize=1 << 16)
def _tree_coproduct(t: LabeledTree):
    """All (restriction, complement-restriction) pairs of a tree monomial,
    with multiplicities, one entry per leaf subset."""
    n = t.degree
    full = (1 << n) - 1
    acc: dict[tuple[LabeledTree, LabeledTree], int] = {}
    for mask in range(1 << n):
        pair = (restrict_reduce(t, mask), restrict_reduce(t, full ^ mask))
        acc[pair] = acc.get(pair, 0) + 1
    return tuple(sorted(acc.items(), key=lambda kv: _pair_sort_key(kv[0])))


def coproduct(e: Element) -> TensorElement:
    """The diagonal coproduct: on a tree monomial, the sum over leaf subsets I
    of (restriction to I) tensor (restriction to the complement)."""
    acc: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}
    for t, c in e.items():
        for pair, mult in _tree_coproduct(t):
            acc[pair] = acc.get(pair, Fraction(0)) + c * mult
    return TensorElement(acc, e.bound, validate=False)


def reduced_coproduct(e: Element) -> TensorElement:
    """coproduct(e) - e#1 - 1#e; defined for elements with no unit component."""
    if e.constant_term() != 0:
        raise ValueError("reduced coproduct needs a zero constant term")
    full = coproduct(e)
    acc = dict(full.terms)
    for t, c in e.items():
        for pair in ((t, EMPTY), (EMPTY, t)):
            acc[pair] = acc.get(pair, Fraction(0)) - c
    return TensorElement(acc, e.bound, validate=False)


def is_primitive(e: Element) -> bool:
    return reduced_coproduct(e).is_zero


def partial(s: LabeledTree, f: Element) -> Element:
    """The coproduct slice with first factor ``s``: the generalized
    differential operator applied to ``f``."""
    return coproduct(f).left_slice(s)


@lru_cache(maxsize=1 << 16)
def _monomial_shuffle(t1: LabeledTree, t2: LabeledTree, bound_value):
    """Shuffle of two tree monomials: every tree of the combined degree whose
    leaf subsets restrict to the two factors, weighted by the subset count."""
    if t1.degree == 0:
        return ((t2, 1),)
    if t2.degree == 0:
        return ((t1, 1),)
    n1, n2 = t1.degree, t2.degree
    n = n1 + n2
    labels1 = tuple(sorted(t1.leaf_labels()))
    combined = sorted(labels1 + t2.leaf_labels())
    full = (1 << n) - 1
    out = []
    arrangements = list(distinct_permutations(combined))
    subsets = list(combinations(range(n), n1))
    for shape in _shapes(n, bound_value):
        for arr in arrangements:
            t = relabel(shape, arr)
            cnt = 0
            for idx in subsets:
                if tuple(sorted(arr[i] for i in idx)) != labels1:
                    continue
                mask = 0
                for i in idx:
                    mask |= 1 << i
                if restrict_reduce(t, mask) == t1 and restrict_reduce(t, full ^ mask) == t2:
                    cnt += 1
            if cnt:
                out.append((t, cnt))
    return tuple(out)


def shuffle(f: Element, g: Element) -> Element:
    """The commutative product dual to the coproduct under the basis pairing."""
    b = _check_same_bound(f, g)
    acc: dict[LabeledTree, Fraction] = {}
    for t1, c1 in f.items():
        for t2, c2 in g.items():
            w = c1 * c2
            for t, cnt in _monomial_shuffle(t1, t2, b.value):
                acc[t] = acc.get(t, Fraction(0)) + w * cnt
    return Element(acc, b, validate=False)


def shuffle_many(elements) -> Element:
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one factor")
    out = elements[0]
    for e in elements[1:]:
        out = shuffle(out, e)
    return out


def pairing(f: Element, g: Element) -> Fraction:
    """Dual-basis pairing: trees pair to 1 exactly with themselves."""
    _check_same_bound(f, g)
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total = Fraction(0)
    for t, c in small.items():
        other = large.terms.get(t)
        if other is not None:
            total += c * other
    return total


def tensor_pairing(u: TensorElement, v: TensorElement) -> Fraction:
    _check_same_bound(u, v)
    small, large = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    total = Fraction(0)
    for p, c in small.items():
        other = large.terms.get(p)
        if other is not None:
            total += c * other
    return total


def nabla2(f: Element) -> TensorElement:
    """The co-operation dual to the binary generator: a tree maps to
    T#1 + 1#T plus its two root branches when the root has arity 2; the unit
    maps to 1#1 (the normalization forced by the pairing identity)."""
    acc: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}

    def add(pair, c):
        acc[pair] = acc.get(pair, Fraction(0)) + c

    for t, c in f.items():
        if t.degree == 0:
            add((EMPTY, EMPTY), c)
            continue
        add((t, EMPTY), c)
        add((EMPTY, t), c)
        if t.children is not None and len(t.children) == 2:
            add((t.children[0], t.children[1]), c)
    return TensorElement(acc, f.bound, validate=False)


def tensor_apply_generator(k: int, args) -> TensorElement:
    """The generator acting on tensor factors component-wise, with the unit
    action on each side; this is the algebra structure the coproduct lands in."""
    args = list(args)
    if len(args) != k or k < 2:
        raise ValueError(f"expected k >= 2 tensor arguments, got {len(args)}")
    b = _check_same_bound(*args)
    if not b.allows(k):
        raise ValueError(f"arity {k} exceeds bound {b}")
    acc: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}
    for picks in product(*(a.terms.items() for a in args)):
        coeff = Fraction(1)
        for _, c in picks:
            coeff *= c
        left = combine_monomials(p[0] for p, _ in picks)
        right = combine_monomials(p[1] for p, _ in picks)
        key = (left, right)
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return TensorElement(acc, b, validate=False)


def tensor_shuffle(u: TensorElement, v: TensorElement) -> TensorElement:
    """Component-wise shuffle on tensors."""
    b = _check_same_bound(u, v)
    acc: dict[tuple[LabeledTree, LabeledTree], Fraction] = {}
    for (a1, b1), c1 in u.items():
        for (a2, b2), c2 in v.items():
            w = c1 * c2
            for tl, cl in _monomial_shuffle(a1, a2, b.value):
                for tr, cr in _monomial_shuffle(b1, b2, b.value):
                    key = (tl, tr)
                    acc[key] = acc.get(key, Fraction(0)) + w * cl * cr
    return TensorElement(acc, b, validate=False)


@dataclass
class HopfAxiomReport:
    ok: bool
    checked_trees: int
    failure: str | None = None


def verify_hopf_axioms(bound, n_vars: int, max_degree: int) -> HopfAxiomReport:
    """Check, on every basis monomial with labels in x1..x<n_vars> up to the
    degree limit: coassociativity, cocommutativity, the generator morphism
    property, and the connected-graded filtration of the reduced coproduct.
    Stops at the first counterexample."""
    b = as_bound(bound)
    checked = 0
    for d in range(1, max_degree + 1):
        for shape in _shapes(d, b.value):
            for labels in product(range(1, n_vars + 1), repeat=d):
                t = relabel(shape, labels)
                checked += 1
                delta = _tree_coproduct(t)

                # cocommutativity
                as_dict = dict(delta)
                for (a, bb), m in delta:
                    if as_dict.get((bb, a)) != m:
                        return HopfAxiomReport(False, checked, f"cocommutativity fails on {t}")

                # coassociativity via triple expansion
                lhs: dict = {}
                rhs: dict = {}
                for (a, bb), m in delta:
                    for (a1, a2), m2 in _tree_coproduct(a):
                        key = (a1, a2, bb)
                        lhs[key] = lhs.get(key, 0) + m * m2
                    for (b1, b2), m2 in _tree_coproduct(bb):
                        key = (a, b1, b2)
                        rhs[key] = rhs.get(key, 0) + m * m2
                if lhs != rhs:
                    return HopfAxiomReport(False, checked, f"coassociativity fails on {t}")

                # connected-graded filtration of the reduced coproduct
                for (a, bb), m in delta:
                    if a.degree + bb.degree != d:
                        return HopfAxiomReport(False, checked, f"grading fails on {t}")
                if as_dict.get((t, EMPTY)) != 1 or as_dict.get((EMPTY, t)) != 1:
                    return HopfAxiomReport(False, checked, f"unit terms wrong on {t}")

                # morphism property at the root generator
                if t.children is not None:
                    k = len(t.children)
                    parts = [coproduct(from_tree(c, b)) for c in t.children]
                    built = tensor_apply_generator(k, parts)
                    if built != coproduct(from_tree(t, b)):
                        return HopfAxiomReport(False, checked, f"morphism property fails on {t}")

    # the unit itself
    if coproduct(unit(b)) != tensor(unit(b), unit(b)):
        return HopfAxiomReport(False, checked, "coproduct of the unit is not 1#1")
    return HopfAxiomReport(True, checked)
