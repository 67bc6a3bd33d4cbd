import random
from fractions import Fraction

from magtree.linalg import echelonize, kernel, rank, rank_of_vectors


def _matvec(rows, vec):
    out = []
    for row in rows:
        s = Fraction(0)
        for j, a in row.items():
            c = vec.get(j)
            if c is not None:
                s += a * c
        out.append(s)
    return out


def test_rank_known_matrix():
    rows = [
        {0: 1, 1: 2, 2: 3},
        {0: 2, 1: 4, 2: 6},  # multiple of the first
        {0: 1, 1: 0, 2: 1},
    ]
    assert rank(rows, 3) == 2


def test_kernel_known_matrix():
    # x + y = 0 in two variables: kernel spanned by (-1, 1)
    free, vectors = kernel([{0: 1, 1: 1}], 2)
    assert free == [1]
    assert vectors == [{1: Fraction(1), 0: Fraction(-1)}]


def test_kernel_reduced_structure():
    rows = [
        {0: 1, 1: 1, 2: 0, 3: 2},
        {1: 1, 2: 1, 3: 0},
    ]
    free, vectors = kernel(rows, 4)
    assert free == [2, 3]
    for f, v in zip(free, vectors):
        assert v[f] == 1
        for other in free:
            if other != f:
                assert other not in v
        assert all(s == 0 for s in _matvec(rows, v))


def test_kernel_annihilates_random_matrices():
    rng = random.Random(61)
    for _ in range(40):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 8)
        rows = []
        for _ in range(nrows):
            row = {
                j: rng.randint(-3, 3)
                for j in range(ncols)
                if rng.random() < 0.6
            }
            rows.append({j: v for j, v in row.items() if v})
        free, vectors = kernel(rows, ncols)
        assert len(vectors) == ncols - rank(rows, ncols)
        for v in vectors:
            assert all(s == 0 for s in _matvec(rows, v))


def test_fractional_rows_are_cleared():
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}]
    ech, pivots = echelonize(rows, 2)
    assert pivots == [0]
    assert all(isinstance(v, int) for v in ech[0].values())
    assert rank(rows, 2) == 1


def test_zero_and_empty_rows_are_dropped():
    assert rank([{}, {0: 0}], 3) == 0
    free, vectors = kernel([{}], 2)
    assert free == [0, 1]
    assert len(vectors) == 2


def test_rank_of_vectors_with_arbitrary_keys():
    vectors = [
        {"a": Fraction(1), "b": Fraction(1)},
        {"a": Fraction(2), "b": Fraction(2)},
        {"b": Fraction(1)},
    ]
    assert rank_of_vectors(vectors) == 2
