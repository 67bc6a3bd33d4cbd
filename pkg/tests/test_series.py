from fractions import Fraction

import pytest

from magtree.series import (
    Series,
    bounded_tree_counts,
    c_prime,
    c_prime_sequence,
    catalan_closed_form,
    compose,
    generators_from_catalan,
    log1p,
    log_derive_sequence,
    operad_generating_series,
    prim_closed_form,
    prim_generating_series,
    reciprocal_onep,
    sqrt1p,
    super_catalan_closed_form,
)
from magtree.trees import OMEGA, catalan, super_catalan


def test_arithmetic_round_trips():
    f = Series([0, 1, -2, Fraction(1, 3), 5, 0, -1])
    assert reciprocal_onep(reciprocal_onep(f) - Series.one(f.nmax)) == Series.one(f.nmax) + f
    s = sqrt1p(f)
    assert s * s == Series.one(f.nmax) + f
    assert f.derivative().integrate().truncate(f.nmax) == f  # f has no constant term


def test_truncation_is_minimum():
    f = Series([0, 1, 1, 1])
    g = Series([0, 1])
    assert (f + g).nmax == 1
    assert (f * g).nmax == 1


def test_log_and_reciprocal_preconditions():
    with pytest.raises(ValueError):
        log1p(Series([1, 1]))
    with pytest.raises(ValueError):
        sqrt1p(Series([2, 0]))
    with pytest.raises(ValueError):
        reciprocal_onep(Series([3]))
    with pytest.raises(ValueError):
        compose(Series([1, 1]), Series([1, 1]))


def test_log1p_of_zero():
    assert log1p(Series.zero(5)).is_zero()


def test_compose_series():
    geometric = Series([1] * 7)  # 1/(1-t) truncated
    doubled = compose(geometric, Series.t(6).scale(2))
    assert list(doubled.coeffs) == [2**k for k in range(7)]
    # composing the catalan series with itself via its defining equation:
    # f = t + f^2 for the binary counts
    f = catalan_closed_form(8)
    assert f == Series.t(8) + f * f


def test_sqrt_of_one_minus_4t():
    s = sqrt1p(Series.from_coefficients([0, -4], 5))
    assert list(s.coeffs) == [1, -2, -2, -4, -10, -28]


def test_catalan_closed_form_matches_counts():
    f = catalan_closed_form(9)
    assert [int(c) for c in f.coeffs[1:]] == [catalan(n) for n in range(1, 10)]
    assert f.coeffs[0] == 0


def test_super_catalan_closed_form_matches_counts():
    f = super_catalan_closed_form(10)
    assert [int(c) for c in f.coeffs[1:]] == [super_catalan(n) for n in range(1, 11)]
    assert [int(c) for c in f.coeffs[1:]] == [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049]


def test_catalan_recurrence_and_closed_form_agree():
    cs = [catalan(n) for n in range(1, 11)]
    for n in range(2, 11):
        assert cs[n - 1] == sum(cs[l - 1] * cs[n - l - 1] for l in range(1, n))


def test_log_derive_examples():
    derived = log_derive_sequence([catalan(n) for n in range(1, 11)])
    assert derived.integral
    assert [int(v) for v in derived.values] == [1, 1, 4, 13, 46, 166, 610, 2269, 8518, 32206]
    assert log_derive_sequence([0, 0, 0]).values == (Fraction(0),) * 3
    sup = log_derive_sequence([super_catalan(n) for n in range(1, 7)])
    assert sup.integral
    assert [int(v) for v in sup.values] == c_prime_sequence(OMEGA, 6)


def test_log_derive_flags_non_integers():
    # integer inputs always derive to integers (a'_n = n a_n - sum a'_k a_(n-k)),
    # so only fractional inputs can trip the flag
    derived = log_derive_sequence([Fraction(1, 2), 1])
    assert not derived.integral
    assert log_derive_sequence([1, 1, 1]).integral


def test_vertex_parity_series():
    cp = c_prime_sequence(2, 7)
    assert [n * catalan(n) - cp[n - 1] for n in range(1, 8)] == [0, 1, 2, 7, 24, 86, 314]


def test_operad_series():
    f = operad_generating_series(2, 7)
    assert [int(c) for c in f.coeffs[1:]] == [1, 1, 2, 5, 14, 42, 132]
    assert bounded_tree_counts(3, 5) == [1, 1, 3, 10, 38]


def test_prim_series_matches_closed_forms():
    f = prim_generating_series(2, 10)
    assert f == prim_closed_form(2, 10)
    assert f.coeffs[1:7] == (
        Fraction(1),
        Fraction(1, 2),
        Fraction(4, 3),
        Fraction(13, 4),
        Fraction(46, 5),
        Fraction(166, 6),
    )
    g = prim_generating_series(OMEGA, 10)
    assert g == prim_closed_form(OMEGA, 10)
    with pytest.raises(ValueError):
        prim_closed_form(3, 5)


def test_prim_series_times_n_recovers_dim_formula():
    from magtree.prim import prim_dim_formula
    from math import factorial

    f = prim_generating_series(2, 6)
    for n in range(1, 7):
        assert f[n] * factorial(n) == prim_dim_formula(n, 2)


def test_generators_from_catalan():
    e = generators_from_catalan(2, 6)
    assert e[0] == 1
    # resubstitute: c == 1/(1 - e) - 1 to the truncation
    es = Series([0] + e)
    c = reciprocal_onep(-es) - Series.one(6)
    assert c == operad_generating_series(2, 6)
    zero_e = generators_from_catalan(2, 4)
    assert isinstance(zero_e, list)
    assert Series([0, 0, 0]).is_zero()


def test_c_prime_single_value():
    assert c_prime(2, 4) == 13
    assert c_prime(OMEGA, 4) == 33
    with pytest.raises(ValueError):
        c_prime(2, 0)
