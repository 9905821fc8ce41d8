import random

import pytest

from ringel.closed_form import (
    chebyshev_u,
    chebyshev_u_explicit,
    gf_series,
    pgd_generating_components,
    ringel_closed_form,
)
from ringel.exactpoly import IntPoly, binom
from ringel.fixtures import RINGEL_GENUS, SYMMETRIC_LADDER_PGD
from ringel.pgd import iter_ringel_matrix, iter_symmetric_ladder_pgd, ringel_genus_poly_matrix


def test_chebyshev_small():
    assert chebyshev_u(0) == IntPoly([1])
    assert chebyshev_u(1) == IntPoly([0, 2])
    assert chebyshev_u(4) == IntPoly([1, 0, -12, 0, 16])
    with pytest.raises(ValueError):
        chebyshev_u(-1)


@pytest.mark.parametrize("p", range(30))
def test_chebyshev_recurrence_matches_explicit_sum(p):
    assert chebyshev_u(p) == chebyshev_u_explicit(p)


def test_chebyshev_generating_function():
    # (1 - 2xt + t^2) * sum U_p t^p = 1, coefficient by coefficient
    us = [chebyshev_u(p) for p in range(12)]
    two_x = IntPoly([0, 2])
    for p in range(2, 12):
        assert us[p] - two_x * us[p - 1] + us[p - 2] == IntPoly()


def test_closed_form_examples():
    assert ringel_closed_form(2).coeffs == (2, 38, 24)
    assert ringel_closed_form(0).coeffs == (2, 2)
    assert ringel_closed_form(50) == ringel_genus_poly_matrix(50)


def test_gf_series_examples():
    s = gf_series(2)
    assert [d.coeffs for d in s] == [(2, 2), (2, 14)]
    assert gf_series(5)[-1].coeffs == RINGEL_GENUS[4]
    big = gf_series(100)
    assert all(big[n] == ringel_closed_form(n) for n in range(100))
    with pytest.raises(ValueError):
        gf_series(0)


def test_degree_and_leading_coefficient():
    for n, d in enumerate(iter_ringel_matrix(60)):
        if n >= 1:
            assert len(d) - 1 == n // 2 + 1
        assert d.coeffs[-1] > 0


def test_pgd_components_c_series():
    s = pgd_generating_components(12)
    for m, c in enumerate(s.c):
        assert c == (IntPoly.monomial(4 ** (m // 2), m // 2) if m % 2 == 0 else IntPoly())


def test_pgd_components_reconstruct_examples():
    s = pgd_generating_components(6)
    assert s.vector(2)["dd2"] == IntPoly([0, 4])
    assert s.vector(3)["dd0"] == IntPoly([6])
    for n, v in enumerate(SYMMETRIC_LADDER_PGD):
        assert s.vector(n) == v


def test_pgd_components_match_iteration():
    s = pgd_generating_components(61)
    for n, v in enumerate(iter_symmetric_ladder_pgd(60)):
        assert s.vector(n) == v


def test_pascal_step_on_random_inputs():
    rng = random.Random(7)
    for _ in range(500):
        a, b = rng.randrange(0, 300), rng.randrange(-3, 300)
        assert binom(a, b) + binom(a, b - 1) == binom(a + 1, b)


def test_intermediate_binomial_form_agrees():
    # the pre-Pascal form with 2C(n-j,j) + C(n-j,j-1)
    for n in range(40):
        first = IntPoly([(2 * binom(n - j, j) + binom(n - j, j - 1)) * 8 ** j for j in range(n + 2)])
        second = IntPoly([(2 * binom(n - j, j) + binom(n - j, j - 1)) * 2 ** (n + 1 + j) for j in range(n + 2)])
        x = IntPoly([0, 1])
        assert (1 - x) * first + x * second == ringel_closed_form(n).to_poly()
