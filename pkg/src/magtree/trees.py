"""Planar reduced rooted trees: parsing, canonical order, enumeration,
operad composition, grafting, and leaf-subset restriction."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product


class TreeParseError(ValueError):
    """Malformed tree text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ArityBound:
    """Cap on the arity of internal nodes: a finite integer >= 2, or omega (no cap)."""

    __slots__ = ("value",)

    def __init__(self, value: int | None = None):
        if value is not None and (
            not isinstance(value, int) or isinstance(value, bool) or value < 2
        ):
            raise ValueError(f"finite arity bound must be an integer >= 2, got {value!r}")
        self.value = value

    @property
    def is_omega(self) -> bool:
        return self.value is None

    def allows(self, arity: int) -> bool:
        return self.value is None or arity <= self.value

    def includes(self, other: ArityBound) -> bool:
        """True if every tree legal under ``other`` is also legal under ``self``."""
        return self.value is None or (other.value is not None and other.value <= self.value)

    def __eq__(self, other):
        return isinstance(other, ArityBound) and self.value == other.value

    def __hash__(self):
        return hash(("ArityBound", self.value))

    def __repr__(self):
        return "omega" if self.value is None else str(self.value)


OMEGA = ArityBound(None)


def as_bound(value) -> ArityBound:
    """Coerce an int >= 2, the string \"omega\", or an ArityBound to an ArityBound."""
    if isinstance(value, ArityBound):
        return value
    if value == "omega":
        return OMEGA
    if isinstance(value, int) and not isinstance(value, bool):
        return ArityBound(value)
    raise ValueError(f"cannot interpret {value!r} as an arity bound")


class LabeledTree:
    """A planar reduced rooted tree with integer leaf labels.

    Three cases: the empty tree (the unit, degree 0), a single leaf ``x<k>``
    (degree 1), or an internal node with an ordered tuple of at least two
    nonempty children. The degree is the leaf count. Instances are immutable,
    hashable, and totally ordered: empty < leaves by label < nodes, nodes
    compared lexicographically by their child lists (a shorter child list
    precedes its proper extensions, so ties fall back to arity).
    """

    __slots__ = ("label", "children", "degree", "_key", "_hash")

    def __init__(self, label: int | None = None, children=None):
        if label is not None and children is not None:
            raise ValueError("a tree is a leaf or a node, not both")
        if children is not None:
            children = tuple(children)
            if len(children) < 2:
                raise ValueError("internal nodes need at least 2 children")
            deg = 0
            for c in children:
                if not isinstance(c, LabeledTree):
                    raise TypeError(f"child {c!r} is not a LabeledTree")
                if c.degree == 0:
                    raise ValueError("the empty tree cannot be a child")
                deg += c.degree
            self.label = None
            self.children = children
            self.degree = deg
        elif label is not None:
            if not isinstance(label, int) or isinstance(label, bool) or label < 1:
                raise ValueError(f"leaf label must be an integer >= 1, got {label!r}")
            self.label = label
            self.children = None
            self.degree = 1
        else:
            self.label = None
            self.children = None
            self.degree = 0
        self._key = None
        self._hash = None

    @property
    def is_empty(self) -> bool:
        return self.degree == 0

    @property
    def is_leaf(self) -> bool:
        return self.label is not None

    @property
    def is_node(self) -> bool:
        return self.children is not None

    def arity(self) -> int:
        return len(self.children) if self.children is not None else 0

    def sort_key(self):
        k = self._key
        if k is None:
            if self.children is not None:
                k = (2, tuple(c.sort_key() for c in self.children))
            elif self.label is not None:
                k = (1, self.label)
            else:
                k = (0,)
            self._key = k
        return k

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return self.sort_key() == other.sort_key()

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(self.sort_key())
        return h

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def __str__(self):
        if self.children is not None:
            return "(" + " ".join(str(c) for c in self.children) + ")"
        if self.label is not None:
            return f"x{self.label}"
        return "1"

    def __repr__(self):
        return f"<tree {self}>"

    def leaf_labels(self) -> tuple[int, ...]:
        """Labels of the leaves in planar (left to right) order."""
        if self.children is None:
            return () if self.label is None else (self.label,)
        out: list[int] = []
        stack = [self]
        while stack:
            t = stack.pop()
            if t.label is not None:
                out.append(t.label)
            elif t.children is not None:
                stack.extend(reversed(t.children))
        return tuple(out)

    def max_arity(self) -> int:
        if self.children is None:
            return 0
        return max(len(self.children), max(c.max_arity() for c in self.children))


EMPTY = LabeledTree()


def leaf(label: int) -> LabeledTree:
    return LabeledTree(label=label)


def node(children) -> LabeledTree:
    return LabeledTree(children=children)


def respects_bound(t: LabeledTree, bound: ArityBound) -> bool:
    return bound.value is None or t.max_arity() <= bound.value


def format_tree(t: LabeledTree) -> str:
    return str(t)


def parse_tree(text: str) -> LabeledTree:
    """Parse the canonical encoding; inverse of ``format_tree``.

    Grammar: ``tree := "1" | "x" INT | "(" tree (" " tree)+ ")"`` with at
    least two children per node, single spaces, and no leading zeros.
    """
    t, pos = parse_tree_prefix(text, 0)
    if pos != len(text):
        raise TreeParseError("trailing input after tree", pos)
    return t


def parse_tree_prefix(s: str, i: int) -> tuple[LabeledTree, int]:
    """Parse one tree starting at offset ``i``; return it and the next offset."""
    if i >= len(s):
        raise TreeParseError("unexpected end of input", i)
    ch = s[i]
    if ch == "1":
        return EMPTY, i + 1
    if ch == "x":
        j = i + 1
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i + 1:
            raise TreeParseError("expected an integer after 'x'", i + 1)
        if s[i + 1] == "0":
            raise TreeParseError("leaf index must be >= 1 with no leading zeros", i + 1)
        return LabeledTree(label=int(s[i + 1 : j])), j
    if ch == "(":
        children = []
        j = i + 1
        while True:
            childstart = j
            t, j = parse_tree_prefix(s, j)
            if t.degree == 0:
                raise TreeParseError("the unit '1' cannot appear as a child", childstart)
            children.append(t)
            if j < len(s) and s[j] == " ":
                j += 1
                continue
            break
        if j >= len(s) or s[j] != ")":
            raise TreeParseError("expected ')'", j)
        if len(children) < 2:
            raise TreeParseError("a node needs at least 2 children", i)
        return LabeledTree(children=children), j + 1
    raise TreeParseError(f"unexpected character {ch!r}", i)


def relabel(t: LabeledTree, labels) -> LabeledTree:
    """Replace the leaf labels of ``t`` in planar order by ``labels``."""
    labels = tuple(labels)
    if len(labels) != t.degree:
        raise ValueError(f"need {t.degree} labels, got {len(labels)}")
    it = iter(labels)
    return _relabel(t, it)


def _relabel(t, it):
    if t.children is not None:
        return LabeledTree(children=tuple(_relabel(c, it) for c in t.children))
    if t.label is not None:
        return LabeledTree(label=next(it))
    return t


def distinct_permutations(items):
    """All distinct arrangements of a multiset, in lexicographic order."""
    seq = sorted(items)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


def _compositions(n, k):
    """Ordered tuples of k positive integers summing to n, lexicographically."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _shapes(n: int, bound_value: int | None):
    if n == 1:
        return (LabeledTree(label=1),)
    out = []
    kmax = n if bound_value is None else min(bound_value, n)
    for k in range(2, kmax + 1):
        for parts in _compositions(n, k):
            for combo in product(*(_shapes(p, bound_value) for p in parts)):
                out.append(LabeledTree(children=combo))
    out.sort()
    return tuple(out)


def enumerate_shapes(n: int, bound) -> list[LabeledTree]:
    """All reduced tree shapes with ``n`` leaves and arities within ``bound``,
    in canonical order. Shapes carry the placeholder label 1 on every leaf."""
    if n < 1:
        raise ValueError("shape enumeration needs n >= 1; the empty tree is not a shape")
    return list(_shapes(n, as_bound(bound).value))


def trees_with_label_multiset(labels, bound) -> list[LabeledTree]:
    """All trees whose leaves carry exactly the given label multiset, canonically ordered."""
    labels = tuple(sorted(labels))
    if not labels:
        raise ValueError("need at least one label")
    bound_value = as_bound(bound).value
    arrangements = list(distinct_permutations(labels))
    out = [
        relabel(shape, arr)
        for shape in _shapes(len(labels), bound_value)
        for arr in arrangements
    ]
    out.sort()
    return out


def compose(t1: LabeledTree, i: int, t2: LabeledTree) -> LabeledTree:
    """Substitute ``t2`` for the ``i``-th leaf of ``t1`` (1-based, planar order)."""
    if t1.degree == 0 or t2.degree == 0:
        raise ValueError("composition requires nonempty trees")
    if not 1 <= i <= t1.degree:
        raise IndexError(f"leaf position {i} out of range 1..{t1.degree}")
    return _compose(t1, i, t2)


def _compose(t, i, repl):
    if t.label is not None:
        return repl
    out = []
    for child in t.children:
        if 1 <= i <= child.degree:
            out.append(_compose(child, i, repl))
        else:
            out.append(child)
        i -= child.degree
    return LabeledTree(children=tuple(out))


def graft(forest) -> LabeledTree:
    """Join an ordered forest of k >= 2 nonempty trees under a new arity-k root."""
    forest = tuple(forest)
    if len(forest) < 2:
        raise ValueError("grafting needs at least 2 trees")
    for t in forest:
        if t.degree == 0:
            raise ValueError("cannot graft the empty tree")
    return LabeledTree(children=forest)


def restrict_reduce(t: LabeledTree, positions) -> LabeledTree:
    """Keep only the leaves at ``positions`` (1-based set, or a bitmask with
    bit i-1 for position i), then contract every vertex left with one child.

    The empty set yields the empty tree; a singleton yields a single leaf.
    """
    if isinstance(positions, int) and not isinstance(positions, bool):
        mask = positions
        if mask < 0 or mask >> t.degree:
            raise IndexError(f"bitmask {mask:#x} out of range for degree {t.degree}")
    else:
        mask = 0
        for p in positions:
            if not 1 <= p <= t.degree:
                raise IndexError(f"leaf position {p} out of range 1..{t.degree}")
            mask |= 1 << (p - 1)
    if mask == 0:
        return EMPTY
    return _reduce_mask(t, mask)


@lru_cache(maxsize=1 << 18)
def _reduce_mask(t, mask):
    # mask is nonzero and fits in t.degree bits
    if t.label is not None:
        return t
    kept = []
    off = 0
    for child in t.children:
        sub = (mask >> off) & ((1 << child.degree) - 1)
        if sub:
            kept.append(_reduce_mask(child, sub))
        off += child.degree
    if len(kept) == 1:
        return kept[0]
    return LabeledTree(children=tuple(kept))


def catalan(n: int) -> int:
    """Number of planar binary trees with n leaves (closed binomial form)."""
    if n < 1:
        raise ValueError("catalan numbers are indexed from 1")
    return math.comb(2 * (n - 1), n - 1) // n


@lru_cache(maxsize=None)
def _tree_count(n: int, bound_value: int | None) -> int:
    if n == 1:
        return 1
    kmax = n if bound_value is None else min(n, bound_value)
    return sum(_forest_count(n, k, bound_value) for k in range(2, kmax + 1))


@lru_cache(maxsize=None)
def _forest_count(n: int, k: int, bound_value: int | None) -> int:
    if k == 1:
        return _tree_count(n, bound_value)
    if n < k:
        return 0
    return sum(
        _tree_count(m, bound_value) * _forest_count(n - m, k - 1, bound_value)
        for m in range(1, n - k + 2)
    )


def c_bounded(bound, n: int) -> int:
    """Number of reduced planar trees with n leaves and arities within the bound."""
    if n < 1:
        raise ValueError("tree counts are indexed from 1")
    return _tree_count(n, as_bound(bound).value)


def super_catalan(n: int) -> int:
    """Number of all reduced planar trees with n leaves (little Schroeder numbers)."""
    return c_bounded(OMEGA, n)
