from collections import Counter

import pytest

from ringel.exactpoly import is_log_concave
from ringel.fixtures import RINGEL_GENUS, SYMMETRIC_LADDER_PGD
from ringel.oracle import (
    BudgetExceeded,
    DartGraph,
    EmbeddingError,
    RotationSystem,
    bar_amalgamate,
    build_ringel_ladder,
    build_symmetric_ladder,
    classify_embedding,
    extend_by_rung,
    iter_rotation_systems,
    oracle_genus_distribution,
    oracle_pgd,
    replay_bar,
    replay_productions,
    rotation_count,
    rotation_from_index,
    trace_faces,
)
from ringel.pgd import PgdClass, ringel_genus_poly_matrix, symmetric_ladder_pgd


def _degrees(g):
    return sorted(g.degree(w) for w in range(g.num_vertices))


def test_symmetric_ladder_shapes():
    g0 = build_symmetric_ladder(0)
    assert (g0.num_vertices, g0.num_edges) == (2, 2)
    assert g0.edge_multiset() == Counter({(0, 1): 2})
    g1 = build_symmetric_ladder(1)
    assert (g1.num_vertices, g1.num_edges) == (4, 5)
    # K_4 minus the edge between the roots
    assert len(g1.edge_multiset()) == 5 and (0, 1) not in g1.edge_multiset()
    g4 = build_symmetric_ladder(4)
    assert (g4.num_vertices, g4.num_edges) == (10, 14)
    for n in range(1, 8):
        g = build_symmetric_ladder(n)
        assert _degrees(g) == [2, 2] + [3] * (2 * n)
        assert g.degree(g.root_u) == g.degree(g.root_v) == 2
        assert g.root_v not in {g.head(d) for d in g.incidence[g.root_u]}


def test_ringel_ladder_shapes():
    g0 = build_ringel_ladder(0)
    assert g0.edge_multiset() == Counter({(0, 1): 3})
    g4 = build_ringel_ladder(4)
    assert (g4.num_vertices, g4.num_edges) == (10, 15)
    assert _degrees(g4) == [3] * 10


def _two_connected(g: DartGraph) -> bool:
    for cut in range(g.num_vertices):
        rest = [w for w in range(g.num_vertices) if w != cut]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            w = stack.pop()
            for d in g.incidence[w]:
                h = g.head(d)
                if h != cut and h not in seen:
                    seen.add(h)
                    stack.append(h)
        if len(seen) != len(rest):
            return False
    return True


def test_ringel_ladder_two_is_cubic_and_two_connected():
    g = build_ringel_ladder(2)
    assert (g.num_vertices, g.num_edges) == (6, 9)
    assert _degrees(g) == [3] * 6
    assert _two_connected(g)


def test_disconnected_graph_rejected():
    with pytest.raises(ValueError):
        DartGraph.from_edges(4, [(0, 1), (2, 3)], 0, 2)


def test_digon_faces():
    g = build_symmetric_ladder(0)
    for r in iter_rotation_systems(g):
        t = trace_faces(g, r)
        assert (t.num_faces, t.genus) == (2, 0)
        assert classify_embedding(g, r) is PgdClass.DD2


def test_theta_graph_faces():
    g = build_ringel_ladder(0)
    faces = Counter(trace_faces(g, r).num_faces for r in iter_rotation_systems(g))
    assert faces == Counter({3: 2, 1: 2})


def test_face_walks_partition_darts():
    g = build_ringel_ladder(3)
    for r in iter_rotation_systems(g):
        t = trace_faces(g, r)
        darts = sorted(d for w in t.walks for d in w)
        assert darts == list(range(g.num_darts))
        assert len(t.walks) == t.num_faces


def test_ringel_four_genus_range():
    g = build_ringel_ladder(4)
    assert {trace_faces(g, r).genus for r in iter_rotation_systems(g)} == {0, 1, 2, 3}


def test_euler_characteristic_every_embedding():
    for g in [build_symmetric_ladder(n) for n in range(5)] + [build_ringel_ladder(n) for n in range(6)]:
        for r in iter_rotation_systems(g):
            t = trace_faces(g, r)
            chi = g.num_vertices - g.num_edges + t.num_faces
            assert chi <= 2 and chi % 2 == 0
            assert t.genus == (2 - chi) // 2 >= 0


def test_corrupt_rotation_rejected():
    g = build_symmetric_ladder(1)
    good = rotation_from_index(g, 0)
    bad = RotationSystem((good.cycles[1],) + good.cycles[1:])
    with pytest.raises(EmbeddingError):
        trace_faces(g, bad)


def test_rotation_indexing():
    g = build_symmetric_ladder(3)
    assert rotation_count(g) == 4 ** 3
    systems = {rotation_from_index(g, i) for i in range(rotation_count(g))}
    assert len(systems) == 64
    with pytest.raises(IndexError):
        rotation_from_index(g, 64)


def test_classify_l1():
    g = build_symmetric_ladder(1)
    got = Counter((classify_embedding(g, r), trace_faces(g, r).genus) for r in iter_rotation_systems(g))
    assert got == Counter({(PgdClass.DD1, 0): 2, (PgdClass.SS2, 1): 2})


def test_classify_requires_two_valent_roots():
    g = build_ringel_ladder(1)
    with pytest.raises(EmbeddingError):
        classify_embedding(g, rotation_from_index(g, 0))


@pytest.mark.parametrize("n", range(5))
def test_oracle_pgd_matches_fixtures(n):
    assert oracle_pgd(n) == SYMMETRIC_LADDER_PGD[n]


@pytest.mark.parametrize("n", range(6))
def test_oracle_ringel_matches_matrix(n):
    got = oracle_genus_distribution(build_ringel_ladder(n))
    assert got == ringel_genus_poly_matrix(n)
    if n < len(RINGEL_GENUS):
        assert got.coeffs == RINGEL_GENUS[n]


def test_oracle_census_total():
    for n in range(5):
        assert sum(sum(c) for c in oracle_pgd(n)) == 4 ** n


def test_parallel_census_matches_serial():
    g = build_ringel_ladder(5)
    assert oracle_genus_distribution(g, workers=3) == oracle_genus_distribution(g)
    assert oracle_pgd(5, workers=2) == oracle_pgd(5)


def test_budget():
    with pytest.raises(BudgetExceeded):
        oracle_pgd(6, budget=1000)
    with pytest.raises(BudgetExceeded):
        oracle_genus_distribution(build_ringel_ladder(3), budget=255)
    assert oracle_genus_distribution(build_ringel_ladder(3), budget=256).coeffs == (2, 70, 184)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("RINGEL_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        oracle_pgd(2)


def test_surgery_produces_the_next_ladder():
    g = build_symmetric_ladder(2)
    r = rotation_from_index(g, 5)
    ext = extend_by_rung(g, r)
    assert len(ext) == 4
    g3 = ext[0][0]
    assert (g3.num_vertices, g3.num_edges) == (8, 11)
    assert _degrees(g3) == _degrees(build_symmetric_ladder(3))
    bars = bar_amalgamate(g, r)
    assert len({b[1] for b in bars}) == 4
    assert _degrees(bars[0][0]) == [3] * 6


@pytest.mark.parametrize("n", range(5))
def test_production_replay(n):
    assert replay_productions(n).ok


@pytest.mark.parametrize("n", range(5))
def test_bar_replay(n):
    assert replay_bar(n).ok


def test_replay_covers_every_class():
    seen = set()
    for n in range(5):
        seen.update(replay_productions(n).classes_seen)
    assert seen == {c.label for c in PgdClass}


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_oracle_pgd_slow(n):
    assert oracle_pgd(n, workers=4) == symmetric_ladder_pgd(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_oracle_ringel_slow(n):
    d = oracle_genus_distribution(build_ringel_ladder(n), workers=4)
    assert d == ringel_genus_poly_matrix(n)
    assert is_log_concave(d)
