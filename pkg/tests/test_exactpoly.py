from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringel.exactpoly import (
    GenusDistribution,
    IntPoly,
    RatBiPoly,
    bipoly_diff,
    bipoly_subst,
    binom,
    has_internal_zeros,
    is_log_concave,
    is_unimodal,
    poly_add,
    poly_mul,
)
from ringel.lcverify import reduced_s0

n = RatBiPoly.var("n")
x = RatBiPoly.var("x")

int_polys = st.lists(st.integers(-50, 50), max_size=6).map(IntPoly)


def test_poly_add_examples():
    assert poly_add(IntPoly([1, 1]), IntPoly([1, 3])) == IntPoly([2, 4])
    p = IntPoly([3, 0, -7])
    assert poly_add(p, IntPoly()) == p
    # (1 - x)(2 + 24x) + 8x(2 + 6x), expanded by hand: 2 + 38x + 24x^2
    lhs = poly_add(poly_mul(IntPoly([1, -1]), IntPoly([2, 24])), poly_mul(IntPoly([0, 8]), IntPoly([2, 6])))
    assert lhs == IntPoly([2, 38, 24])


def test_poly_mul_examples():
    assert poly_mul(IntPoly([1, 1]), IntPoly([1, -1])) == IntPoly([1, 0, -1])
    u1 = IntPoly([0, 2])
    assert poly_mul(IntPoly([0, 2]), u1) == IntPoly([0, 0, 4])
    assert poly_mul(IntPoly([0, 2]), u1) - IntPoly([1]) == IntPoly([-1, 0, 4])


def test_normalization_and_zero_degree():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().degree is None
    assert IntPoly([5]).degree == 0
    assert (IntPoly([1, 1]) - IntPoly([1, 1])).degree is None


def test_big_coefficients_stay_exact():
    p = IntPoly([2 ** 200, 1])
    assert (p * p)[0] == 2 ** 400
    assert (p * p)[1] == 2 ** 201


@given(int_polys, int_polys, int_polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(int_polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(p, v):
    q = IntPoly([1, 2, 3])
    assert (p * q)(v) == p(v) * q(v)
    assert (p + q)(v) == p(v) + q(v)


def test_binom_vanishes_outside_range():
    assert binom(5, -1) == 0
    assert binom(3, 4) == 0
    assert binom(-2, 1) == 0
    assert binom(10, 3) == 120


@given(st.integers(0, 200), st.integers(1, 200))
def test_pascal_recursion(a, b):
    assert binom(a, b) + binom(a, b - 1) == binom(a + 1, b)


# -- sequence predicates ---------------------------------------------------------


def test_log_concave_examples():
    assert is_log_concave((2, 38, 24))
    assert is_log_concave((1, 1, 1))
    assert not is_log_concave((1, 0, 1))
    assert is_log_concave(GenusDistribution([2, 118, 648, 256]))


def test_unimodal_examples():
    assert is_unimodal((2, 118, 648, 256))
    assert is_unimodal(())
    assert not is_unimodal((1, 0, 2, 1))
    assert is_unimodal((3, 3, 1))


def test_genus_distribution_invariants():
    with pytest.raises(ValueError):
        GenusDistribution([1, -1])
    with pytest.raises(ValueError):
        GenusDistribution([1, 0, 2])
    assert GenusDistribution([0, 0, 3, 1, 0]).coeffs == (0, 0, 3, 1)
    assert has_internal_zeros([1, 0, 1])
    assert not has_internal_zeros([0, 1, 1, 0])


@given(st.lists(st.integers(0, 30), max_size=8))
def test_log_concave_without_internal_zeros_is_unimodal(seq):
    if is_log_concave(seq) and not has_internal_zeros(seq):
        assert is_unimodal(seq)


@given(st.lists(st.integers(0, 30), max_size=8))
def test_unimodal_nonnegative_has_no_internal_zeros(seq):
    if is_unimodal(seq):
        assert not has_internal_zeros(seq)


# -- RatBiPoly ------------------------------------------------------------------------


def test_diff_examples():
    assert bipoly_diff(n ** 2 * x, "n", 1) == 2 * n * x
    assert bipoly_diff(reduced_s0(), "x", 4) == 432
    p = sum((n ** i * (i + 1) for i in range(8)), RatBiPoly())
    assert bipoly_diff(p, "n", 8).is_zero()
    assert bipoly_diff(p, "n", 0) == p


def test_subst_examples():
    k = RatBiPoly.var("k", ("n", "k"))
    nk = RatBiPoly.var("n", ("n", "k"))
    assert bipoly_subst(x ** 2, {"x": k * nk}) == k ** 2 * nk ** 2
    d3 = 432 * x - 108 * (n ** 2 + 5 * n + 8)
    assert bipoly_subst(d3, {"x": Fraction(1, 2) * n}) == -108 * (n ** 2 + 3 * n + 8)
    assert bipoly_subst(n * x + 1, {"n": Fraction(3, 2)}) == Fraction(3, 2) * x + 1


def test_evaluation_and_coefficients():
    p = 3 * n ** 2 * x - Fraction(1, 2) * x + 7
    assert p(n=2, x=3) == 36 - Fraction(3, 2) + 7
    assert p.degree("n") == 2
    assert p.degree("x") == 1
    assert p.coefficients("x")[1] == 3 * n ** 2 - Fraction(1, 2)
    assert (n * x + n).divide_by_var("n") == x + 1
    with pytest.raises(ValueError):
        (n * x + 1).divide_by_var("n")


def test_equality_ignores_unused_variables():
    a = RatBiPoly.var("n", ("n", "x", "L"))
    assert a == n
    assert hash(a) == hash(n)
    assert RatBiPoly({(0, 0): 0}) == 0


rat = st.fractions(min_value=-5, max_value=5, max_denominator=6)
bipolys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), rat, max_size=6).map(RatBiPoly)


@given(bipolys, bipolys, bipolys)
@settings(max_examples=50)
def test_bipoly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(bipolys, bipolys)
@settings(max_examples=50)
def test_diff_is_a_derivation(p, q):
    assert (p * q).diff("n") == p.diff("n") * q + p * q.diff("n")


def _log1p_power_series(k: int, terms: int) -> list[Fraction]:
    # coefficients of log(1 + t)^k up to t^terms, plain list arithmetic
    log = [Fraction(0)] + [Fraction((-1) ** (m + 1), m) for m in range(1, terms + 1)]
    out = [Fraction(1)] + [Fraction(0)] * terms
    for _ in range(k):
        nxt = [Fraction(0)] * (terms + 1)
        for i, a in enumerate(out):
            if a:
                for j in range(terms + 1 - i):
                    nxt[i + j] += a * log[j]
        out = nxt
    return out


def _forward_difference(values: list[Fraction], m: int) -> Fraction:
    return sum((-1) ** (m - i) * comb(m, i) * values[i] for i in range(m + 1))


@given(bipolys, st.integers(0, 4), rat, rat, st.sampled_from([Fraction(1), Fraction(1, 3), Fraction(2, 7)]))
@settings(max_examples=60)
def test_derivative_matches_finite_differences(p, order, n0, x0, h):
    """D^k = h^-k log(1 + Delta)^k is exact on polynomials once Delta^(d+1) vanishes."""
    d = p.degree("n") or 0
    samples = [p(n=n0 + i * h, x=x0) for i in range(d + 1)]
    series = _log1p_power_series(order, d)
    estimate = sum(series[m] * _forward_difference(samples, m) for m in range(d + 1)) / h ** order
    assert bipoly_subst(bipoly_diff(p, "n", order), {"n": n0, "x": x0}).constant_value() == estimate
