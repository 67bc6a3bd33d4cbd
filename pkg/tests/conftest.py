"""Shared helpers for the test suite: random tree and element generators and
a planar-tree enumerator counted by vertices (used only by parity checks)."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from magtree.freealg import Element
from magtree.trees import enumerate_shapes, relabel


def random_tree(rng, max_degree, bound, n_vars):
    d = rng.randint(1, max_degree)
    shapes = enumerate_shapes(d, bound)
    shape = shapes[rng.randrange(len(shapes))]
    labels = [rng.randint(1, n_vars) for _ in range(d)]
    return relabel(shape, labels)


def random_element(rng, max_degree, bound, n_vars, n_terms=3):
    terms = {}
    for _ in range(rng.randint(1, n_terms)):
        t = random_tree(rng, max_degree, bound, n_vars)
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        terms[t] = terms.get(t, 0) + c
    return Element(terms, bound)


def _compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def unreduced_trees(n):
    """All planar rooted trees with n vertices, as nested child tuples.

    Unary vertices are allowed here; this enumerator exists only to check the
    vertex-parity identities and stays out of the package API.
    """
    if n == 1:
        return [()]
    out = []
    for k in range(1, n):
        for parts in _compositions(n - 1, k):
            for combo in product(*(unreduced_trees(m) for m in parts)):
                out.append(combo)
    return out


def vertex_parities(t):
    """(even, odd) counts of vertex arities in a nested-tuple tree."""
    even = 1 - (len(t) % 2)
    odd = len(t) % 2
    for child in t:
        e, o = vertex_parities(child)
        even += e
        odd += o
    return even, odd
