import pytest

from ringel.exactpoly import IntPoly
from ringel.fixtures import RINGEL_GENUS, SYMMETRIC_LADDER_PGD
from ringel.pgd import (
    LABELS,
    PgdClass,
    PgdVector,
    apply_production,
    bar_dot,
    bar_vector,
    initial_vector,
    iter_symmetric_ladder_pgd,
    pgd_total,
    production_matrix,
    ringel_genus_poly_matrix,
    symmetric_ladder_pgd,
)

X = IntPoly([0, 1])


def test_initial_vector():
    v = initial_vector()
    assert [c.coeffs for c in v] == [(), (), (1,), (), (), (), (), (), (), ()]
    assert pgd_total(v) == IntPoly([1])


def test_labels_follow_production_order():
    assert LABELS == ("dd0", "dd1", "dd2", "ds0", "ds1", "sd0", "sd1", "ss0", "ss1", "ss2")
    assert PgdClass.SS2.label == "ss2"
    assert symmetric_ladder_pgd(1)["ss2"] == 2 * X


def test_production_matrix_rows():
    m = production_matrix()
    assert m[0] == (2, 0, 0, 0, 0, 2 * X, 0, 0, 0, 0)
    assert m[9] == (0, 0, 2, 0, 2, 0, 0, 0, 0, 0)
    for row in m:
        assert sum(e(1) for e in row) == 4


def test_bar_vector():
    b = bar_vector()
    assert b == (4 * X, 1 + 3 * X, 2 + 2 * X, 4 * X, 2 + 2 * X, 4 * X, 2 + 2 * X, 4 * X, 4, 4)
    assert all(e(1) == 4 for e in b)
    assert b[PgdClass.DD2] == IntPoly([2, 2])


@pytest.mark.parametrize("n", range(4))
def test_apply_production_steps(n):
    assert apply_production(SYMMETRIC_LADDER_PGD[n]) == SYMMETRIC_LADDER_PGD[n + 1]


def test_symmetric_ladder_pgd_examples():
    assert symmetric_ladder_pgd(0) == initial_vector()
    assert symmetric_ladder_pgd(3) == SYMMETRIC_LADDER_PGD[3]
    assert pgd_total(symmetric_ladder_pgd(4))(1) == 256
    with pytest.raises(ValueError):
        symmetric_ladder_pgd(-1)


def test_pgd_total_examples():
    assert pgd_total(SYMMETRIC_LADDER_PGD[1]) == IntPoly([2, 2])
    assert pgd_total(SYMMETRIC_LADDER_PGD[0]) == IntPoly([1])
    assert pgd_total(SYMMETRIC_LADDER_PGD[4])(1) == 256


@pytest.mark.parametrize("n,want", list(enumerate(RINGEL_GENUS)))
def test_ringel_matrix_examples(n, want):
    assert ringel_genus_poly_matrix(n).coeffs == want


def test_counts_and_constant_term():
    for n, v in enumerate(iter_symmetric_ladder_pgd(40)):
        assert pgd_total(v)(1) == 4 ** n
        gamma = bar_dot(v)
        assert gamma(1) == 4 ** (n + 1)
        assert gamma[0] == 2
        assert all(c >= 0 for p in v for c in p)


def test_pgd_vector_is_immutable_and_checked():
    v = initial_vector()
    with pytest.raises(AttributeError):
        v.coords = ()
    with pytest.raises(ValueError):
        PgdVector([0] * 9)
