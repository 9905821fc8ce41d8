"""Ground truth by brute force: enumerate rotation systems and trace faces.

Graphs are stored as darts. Edge ``i`` owns darts ``2i`` and ``2i + 1``, so the
reversal involution is ``d ^ 1``. A rotation system lists, for every vertex,
the cyclic order of the darts leaving it. Faces are the orbits of
``d -> succ(d ^ 1)``.
"""

from __future__ import annotations

import os
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, prod

from .exactpoly import GenusDistribution, IntPoly
from .pgd import PgdClass, PgdVector, bar_vector, production_matrix

DEFAULT_BUDGET = 2 ** 24


class BudgetExceeded(RuntimeError):
    """Enumeration would visit more rotation systems than allowed."""


class EmbeddingError(ValueError):
    """A rotation system that does not describe a valid orientable embedding."""


def default_budget() -> int:
    env = os.environ.get("RINGEL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class DartGraph:
    tails: tuple[int, ...]
    num_vertices: int
    root_u: int
    root_v: int
    incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.tails) % 2:
            raise ValueError("odd number of darts")
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for d, t in enumerate(self.tails):
            inc[t].append(d)
        object.__setattr__(self, "incidence", tuple(tuple(ds) for ds in inc))
        if not self._connected():
            raise ValueError("graph is not connected")

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]],
                   root_u: int, root_v: int) -> DartGraph:
        tails: list[int] = []
        for a, b in edges:
            tails += [a, b]
        return cls(tuple(tails), num_vertices, root_u, root_v)

    def _connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            w = stack.pop()
            for d in self.incidence[w]:
                h = self.tails[d ^ 1]
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return len(seen) == self.num_vertices

    @property
    def num_darts(self) -> int:
        return len(self.tails)

    @property
    def num_edges(self) -> int:
        return len(self.tails) // 2

    def head(self, d: int) -> int:
        return self.tails[d ^ 1]

    def degree(self, w: int) -> int:
        return len(self.incidence[w])

    def edge_multiset(self) -> Counter:
        return Counter(tuple(sorted((self.tails[2 * i], self.tails[2 * i + 1])))
                       for i in range(self.num_edges))


@dataclass(frozen=True)
class RotationSystem:
    cycles: tuple[tuple[int, ...], ...]

    def successor(self, num_darts: int) -> list[int]:
        succ = [-1] * num_darts
        for cyc in self.cycles:
            for i, d in enumerate(cyc):
                succ[d] = cyc[(i + 1) % len(cyc)]
        return succ

    def validate(self, g: DartGraph) -> None:
        if len(self.cycles) != g.num_vertices:
            raise EmbeddingError("one rotation per vertex required")
        seen = set()
        for w, cyc in enumerate(self.cycles):
            for d in cyc:
                if d in seen or not 0 <= d < g.num_darts:
                    raise EmbeddingError(f"dart {d} repeated or out of range")
                if g.tails[d] != w:
                    raise EmbeddingError(f"dart {d} listed at vertex {w}, tail is {g.tails[d]}")
                seen.add(d)
        if len(seen) != g.num_darts:
            raise EmbeddingError("some darts are missing from the rotation")


# -- constructors -------------------------------------------------------------


def build_symmetric_ladder(n: int) -> DartGraph:
    """P_2 x P_{n+2} with both end rungs contracted; roots u=0 and v=1.

    Rung ``t`` (1..n) joins vertices ``2t`` and ``2t + 1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    u, v = 0, 1
    if n == 0:
        return DartGraph.from_edges(2, [(u, v), (u, v)], u, v)

    def node(side: int, t: int) -> int:
        return 2 * t + side

    edges = [(u, node(0, 1)), (u, node(1, 1))]
    for t in range(1, n):
        edges += [(node(0, t), node(0, t + 1)), (node(1, t), node(1, t + 1))]
    edges += [(node(0, n), v), (node(1, n), v)]
    edges += [(node(0, t), node(1, t)) for t in range(1, n + 1)]
    return DartGraph.from_edges(2 * n + 2, edges, u, v)


def build_ringel_ladder(n: int) -> DartGraph:
    g = build_symmetric_ladder(n)
    return DartGraph(g.tails + (g.root_u, g.root_v), g.num_vertices, g.root_u, g.root_v)


# -- rotation enumeration -----------------------------------------------------


def rotation_count(g: DartGraph) -> int:
    return prod(factorial(max(g.degree(w) - 1, 0)) for w in range(g.num_vertices))


def _vertex_choices(g: DartGraph) -> list[list[tuple[int, ...]]]:
    # the first dart stays in front; the rest are permuted
    out = []
    for w in range(g.num_vertices):
        ds = g.incidence[w]
        if len(ds) <= 2:
            out.append([ds])
        else:
            out.append([(ds[0],) + p for p in permutations(ds[1:])])
    return out


def rotation_from_index(g: DartGraph, index: int) -> RotationSystem:
    """Mixed-radix decoding, vertex 0 least significant.

    For a trivalent vertex with darts (d0, d1, d2) digit 0 is (d0 d1 d2) and
    digit 1 is (d0 d2 d1); 2-valent vertices contribute no digit.
    """
    if not 0 <= index < rotation_count(g):
        raise IndexError(index)
    cycles = []
    for choices in _vertex_choices(g):
        index, digit = divmod(index, len(choices))
        cycles.append(choices[digit])
    return RotationSystem(tuple(cycles))


def iter_rotation_systems(g: DartGraph, start: int = 0, stop: int | None = None) -> Iterator[RotationSystem]:
    stop = rotation_count(g) if stop is None else stop
    for idx in range(start, stop):
        yield rotation_from_index(g, idx)


# -- faces ----------------------------------------------------------------------


@dataclass(frozen=True)
class FaceTrace:
    num_faces: int
    genus: int
    walks: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]


def _face_labels(succ: Sequence[int]) -> tuple[list[int], int]:
    face = [-1] * len(succ)
    nf = 0
    for d in range(len(succ)):
        if face[d] < 0:
            e = d
            while face[e] < 0:
                face[e] = nf
                e = succ[e ^ 1]
            nf += 1
    return face, nf


def _genus(num_vertices: int, num_edges: int, num_faces: int) -> int:
    twice = 2 - num_vertices + num_edges - num_faces
    if twice < 0 or twice % 2:
        raise EmbeddingError(
            f"Euler characteristic gives genus {twice}/2 (V={num_vertices}, E={num_edges}, F={num_faces})")
    return twice // 2


def trace_faces(g: DartGraph, r: RotationSystem) -> FaceTrace:
    r.validate(g)
    succ = r.successor(g.num_darts)
    face, nf = _face_labels(succ)
    walks = []
    seen = set()
    for d in range(g.num_darts):
        if face[d] in seen:
            continue
        seen.add(face[d])
        walk = [d]
        e = succ[d ^ 1]
        while e != d:
            walk.append(e)
            e = succ[e ^ 1]
        walks.append(tuple(walk))
    return FaceTrace(nf, _genus(g.num_vertices, g.num_edges, nf), tuple(walks), tuple(face))


# -- pgd classification --------------------------------------------------------


def _classify(g: DartGraph, succ: Sequence[int], face: Sequence[int]) -> PgdClass:
    u_darts = g.incidence[g.root_u]
    v_darts = g.incidence[g.root_v]
    if len(u_darts) != 2 or len(v_darts) != 2:
        raise EmbeddingError("both roots must be 2-valent")
    fu = {face[d] for d in u_darts}
    fv = {face[d] for d in v_darts}
    shared = len(fu & fv)
    if len(fu) == 2 and len(fv) == 2:
        return PgdClass(PgdClass.DD0 + shared)
    if len(fu) == 2:
        return PgdClass(PgdClass.DS0 + shared)
    if len(fv) == 2:
        return PgdClass(PgdClass.SD0 + shared)
    if not shared:
        return PgdClass.SS0
    # one face visits u twice and v twice; read the visits in walk order
    start = u_darts[0]
    word = []
    e = start
    while True:
        t = g.tails[e]
        if t == g.root_u:
            word.append("u")
        elif t == g.root_v:
            word.append("v")
        e = succ[e ^ 1]
        if e == start:
            break
    w = "".join(word)
    rotations = {w[i:] + w[:i] for i in range(len(w))}
    if "uuvv" in rotations:
        return PgdClass.SS1
    if "uvuv" in rotations:
        return PgdClass.SS2
    raise EmbeddingError(f"unexpected root pattern {w!r}")


def classify_embedding(g: DartGraph, r: RotationSystem) -> PgdClass:
    r.validate(g)
    succ = r.successor(g.num_darts)
    face, _ = _face_labels(succ)
    return _classify(g, succ, face)


# -- census ----------------------------------------------------------------------


def _census_chunk(args: tuple[DartGraph, bool, int, int]) -> Counter:
    g, partition, start, stop = args
    choices = _vertex_choices(g)
    radices = [len(c) for c in choices]
    varying = [w for w, k in enumerate(radices) if k > 1]
    succ = [-1] * g.num_darts
    for w, cs in enumerate(choices):
        if len(cs) == 1:
            cyc = cs[0]
            for i, d in enumerate(cyc):
                succ[d] = cyc[(i + 1) % len(cyc)]
    nv, ne = g.num_vertices, g.num_edges
    counts: Counter = Counter()
    for idx in range(start, stop):
        rest = idx
        for w in varying:
            rest, digit = divmod(rest, radices[w])
            cyc = choices[w][digit]
            for i, d in enumerate(cyc):
                succ[d] = cyc[(i + 1) % len(cyc)]
        face, nf = _face_labels(succ)
        genus = _genus(nv, ne, nf)
        if partition:
            counts[(int(_classify(g, succ, face)), genus)] += 1
        else:
            counts[genus] += 1
    return counts


def _census(g: DartGraph, partition: bool, budget: int | None, workers: int) -> Counter:
    total = rotation_count(g)
    budget = default_budget() if budget is None else budget
    if total > budget:
        raise BudgetExceeded(f"{total} rotation systems exceed the budget of {budget}")
    if workers <= 1 or total < 1024:
        return _census_chunk((g, partition, 0, total))
    pieces = workers * 4
    bounds = [total * i // pieces for i in range(pieces + 1)]
    jobs = [(g, partition, bounds[i], bounds[i + 1]) for i in range(pieces)]
    merged: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_census_chunk, jobs):
            merged.update(part)
    return merged


def _poly_from_counts(counts: dict[int, int]) -> IntPoly:
    if not counts:
        return IntPoly()
    return IntPoly([counts.get(i, 0) for i in range(max(counts) + 1)])


def oracle_pgd_of(g: DartGraph, budget: int | None = None, workers: int = 1) -> PgdVector:
    counts = _census(g, True, budget, workers)
    per_class: list[dict[int, int]] = [{} for _ in PgdClass]
    for (cls, genus), k in counts.items():
        per_class[cls][genus] = k
    return PgdVector(_poly_from_counts(c) for c in per_class)


def oracle_pgd(n: int, budget: int | None = None, workers: int = 1) -> PgdVector:
    return oracle_pgd_of(build_symmetric_ladder(n), budget, workers)


def oracle_genus_distribution(g: DartGraph, budget: int | None = None,
                              workers: int = 1) -> GenusDistribution:
    counts = _census(g, False, budget, workers)
    return GenusDistribution.from_poly(_poly_from_counts(dict(counts)))


# -- surgery -----------------------------------------------------------------------


def _subdivide(g: DartGraph, cycles: list[tuple[int, ...]], d: int) -> tuple[DartGraph, int]:
    """Put a new vertex in the middle of dart ``d``'s edge.

    ``d`` keeps its tail and now ends at the new vertex ``w``; the far end of
    the edge is reached through a new edge whose far dart takes the old
    position of ``d ^ 1`` in its vertex rotation. ``cycles`` is updated in place.
    """
    w = g.num_vertices
    far = g.tails[d ^ 1]
    e = g.num_darts
    tails = list(g.tails) + [w, far]
    tails[d ^ 1] = w
    cycles[far] = tuple(e ^ 1 if x == d ^ 1 else x for x in cycles[far])
    cycles.append((d ^ 1, e))
    return DartGraph(tuple(tails), w + 1, g.root_u, g.root_v), w


def _insertions(cycle: tuple[int, ...], dart: int) -> list[tuple[int, ...]]:
    return [cycle[:i + 1] + (dart,) + cycle[i + 1:] for i in range(len(cycle))]


def _join(g: DartGraph, cycles: Sequence[tuple[int, ...]], a: int, b: int
          ) -> list[tuple[DartGraph, RotationSystem]]:
    """Every way of adding an edge a-b, one per pair of corner insertions."""
    e = g.num_darts
    g2 = DartGraph(g.tails + (a, b), g.num_vertices, g.root_u, g.root_v)
    out = []
    for ca in _insertions(cycles[a], e):
        for cb in _insertions(cycles[b], e ^ 1):
            cyc = list(cycles)
            cyc[a] = ca
            cyc[b] = cb
            out.append((g2, RotationSystem(tuple(cyc))))
    return out


def extend_by_rung(g: DartGraph, r: RotationSystem) -> list[tuple[DartGraph, RotationSystem]]:
    """Add one rung next to root u: subdivide both root edges and join the new vertices."""
    a, b = g.incidence[g.root_u]
    cycles = list(r.cycles)
    g1, w1 = _subdivide(g, cycles, a)
    g2, w2 = _subdivide(g1, cycles, b)
    return _join(g2, cycles, w1, w2)


def bar_amalgamate(g: DartGraph, r: RotationSystem) -> list[tuple[DartGraph, RotationSystem]]:
    return _join(g, list(r.cycles), g.root_u, g.root_v)


@dataclass(frozen=True)
class ReplayResult:
    n: int
    embeddings: int
    mismatches: tuple[tuple[int, str, dict, dict], ...]
    classes_seen: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _expected_row(entries: Sequence[IntPoly]) -> dict:
    return {(j, k): c for j, p in enumerate(entries) for k, c in enumerate(p.coeffs) if c}


def replay_productions(n: int) -> ReplayResult:
    """Extend every embedding of L_n by a rung and compare with its matrix row.

    Each outcome is recorded as (new class, genus increase); the multiset must
    equal the row of the production matrix indexed by the old class.
    """
    g = build_symmetric_ladder(n)
    m = production_matrix()
    expected_rows = [_expected_row(row) for row in m]
    bad = []
    seen = set()
    total = 0
    for idx, r in enumerate(iter_rotation_systems(g)):
        total += 1
        cls = classify_embedding(g, r)
        genus = trace_faces(g, r).genus
        seen.add(cls.label)
        got: Counter = Counter()
        for g2, r2 in extend_by_rung(g, r):
            got[(int(classify_embedding(g2, r2)), trace_faces(g2, r2).genus - genus)] += 1
        if dict(got) != expected_rows[cls]:
            bad.append((idx, cls.label, dict(got), expected_rows[cls]))
    return ReplayResult(n, total, tuple(bad), tuple(sorted(seen)))


def replay_bar(n: int) -> ReplayResult:
    """Join the roots of every embedding of L_n; genus increases must match the bar entry."""
    g = build_symmetric_ladder(n)
    b = bar_vector()
    bad = []
    seen = set()
    total = 0
    for idx, r in enumerate(iter_rotation_systems(g)):
        total += 1
        cls = classify_embedding(g, r)
        genus = trace_faces(g, r).genus
        seen.add(cls.label)
        got: Counter = Counter()
        for g2, r2 in bar_amalgamate(g, r):
            got[trace_faces(g2, r2).genus - genus] += 1
        want = {k: c for k, c in enumerate(b[cls].coeffs) if c}
        if dict(got) != want:
            bad.append((idx, cls.label, dict(got), want))
    return ReplayResult(n, total, tuple(bad), tuple(sorted(seen)))
