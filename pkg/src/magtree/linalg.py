"""Sparse exact linear algebra over the rationals: fraction-free row echelon
reduction, rank, and reduced kernel bases."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd


def _integerize(row: dict) -> dict[int, int]:
    """Scale a sparse row to integers and divide out the content."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        if isinstance(v, Fraction):
            denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = {}
    for j, v in row.items():
        w = int(v * denom) if isinstance(v, Fraction) else v * denom
        if w:
            ints[j] = w
    if not ints:
        return {}
    g = reduce(gcd, (abs(v) for v in ints.values()))
    if g > 1:
        ints = {j: v // g for j, v in ints.items()}
    return ints


def _combine(target: dict[int, int], te: int, prow: dict[int, int], pe: int, c: int):
    """pe * target - te * prow with the entry at column c cancelled, content-reduced."""
    new = {}
    for j, v in target.items():
        if j != c:
            new[j] = pe * v
    for j, v in prow.items():
        if j == c:
            continue
        w = new.get(j, 0) - te * v
        if w:
            new[j] = w
        elif j in new:
            del new[j]
    if not new:
        return new
    g = reduce(gcd, (abs(v) for v in new.values()))
    if g > 1:
        new = {j: v // g for j, v in new.items()}
    return new


def echelonize(rows, ncols: int | None = None):
    """Bring sparse rows to echelon form, processing columns left to right and
    picking, per column, the candidate entry with the fewest bits (ties go to
    the earliest row). Returns (echelon rows, pivot columns)."""
    work = [r for r in (_integerize(row) for row in rows) if r]
    if ncols is None:
        ncols = 1 + max((max(r) for r in work), default=-1)
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        best = -1
        best_key = None
        for i in range(r, len(work)):
            e = work[i].get(c)
            if e is not None:
                key = (abs(e).bit_length(), i)
                if best_key is None or key < best_key:
                    best_key = key
                    best = i
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = work[r]
        pe = prow[c]
        for i in range(r + 1, len(work)):
            te = work[i].get(c)
            if te is not None:
                work[i] = _combine(work[i], te, prow, pe, c)
        pivot_cols.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivot_cols


def rank(rows, ncols: int | None = None) -> int:
    return len(echelonize(rows, ncols)[1])


def kernel(rows, ncols: int):
    """Reduced kernel basis of the column space map: one vector per free
    column f, with entry 1 at f, 0 at the other free columns, and the pivot
    entries solved exactly. Returns (free columns, vectors)."""
    ech, pivot_cols = echelonize(rows, ncols)
    pivset = set(pivot_cols)
    free = [c for c in range(ncols) if c not in pivset]
    vectors = []
    for f in free:
        x: dict[int, Fraction] = {f: Fraction(1)}
        for r in range(len(pivot_cols) - 1, -1, -1):
            row = ech[r]
            c = pivot_cols[r]
            s = Fraction(0)
            for j, v in row.items():
                if j != c:
                    xv = x.get(j)
                    if xv is not None:
                        s += v * xv
            if s:
                x[c] = -s / row[c]
        vectors.append(x)
    return free, vectors


def rank_of_vectors(vectors) -> int:
    """Rank of a family of sparse vectors keyed by arbitrary sortable keys."""
    keys = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(keys)}
    rows = [{index[k]: c for k, c in v.items()} for v in vectors]
    return rank(rows, len(keys))
