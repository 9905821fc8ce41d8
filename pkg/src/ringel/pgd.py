"""Partitioned genus distributions of symmetric ladders and the Ringel ladder bar.

Coordinates are kept in production-listing order::

    dd0 dd1 dd2 ds0 ds1 sd0 sd1 ss0 ss1 ss2

where ``dd1``/``dd2`` stand for dd'/dd'' and ``ds1``/``sd1`` for ds'/sd'.
The first letter describes root ``u``, the second root ``v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from enum import IntEnum

from .exactpoly import ONE, X, ZERO, GenusDistribution, IntPoly


class PgdClass(IntEnum):
    DD0 = 0
    DD1 = 1
    DD2 = 2
    DS0 = 3
    DS1 = 4
    SD0 = 5
    SD1 = 6
    SS0 = 7
    SS1 = 8
    SS2 = 9

    @property
    def label(self) -> str:
        return self.name.lower()


LABELS: tuple[str, ...] = tuple(c.label for c in PgdClass)


class PgdVector:
    """Ten genus polynomials, one per :class:`PgdClass`."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[IntPoly | int]):
        cs = tuple(c if isinstance(c, IntPoly) else IntPoly([c]) for c in coords)
        if len(cs) != 10:
            raise ValueError(f"pgd-vector needs 10 coordinates, got {len(cs)}")
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, name, value):
        raise AttributeError("PgdVector is immutable")

    def __getitem__(self, key: int | str) -> IntPoly:
        if isinstance(key, str):
            key = LABELS.index(key)
        return self.coords[key]

    def __iter__(self) -> Iterator[IntPoly]:
        return iter(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PgdVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        inner = ", ".join(f"{lab}={p}" for lab, p in zip(LABELS, self.coords))
        return f"PgdVector({inner})"

    def as_dict(self) -> dict[str, IntPoly]:
        return dict(zip(LABELS, self.coords))


ProductionMatrix = tuple[tuple[IntPoly, ...], ...]


def _row(*entries) -> tuple[IntPoly, ...]:
    return tuple(e if isinstance(e, IntPoly) else IntPoly([e]) for e in entries)


_2X = X * 2

# Each row is one production: class of the old embedding -> classes and genus
# shifts after adding a rung at the root-u end.
_M: ProductionMatrix = (
    _row(2, 0, 0, 0, 0, _2X, 0, 0, 0, 0),
    _row(1, 1, 0, 0, 0, 0, _2X, 0, 0, 0),
    _row(0, 2, 0, 0, 0, 0, 0, 0, 0, _2X),
    _row(0, 0, 0, 2, 0, 0, 0, _2X, 0, 0),
    _row(0, 0, 0, 1, 1, 0, 0, 0, _2X, 0),
    _row(4, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    _row(0, 4, 0, 0, 0, 0, 0, 0, 0, 0),
    _row(0, 0, 0, 4, 0, 0, 0, 0, 0, 0),
    _row(0, 0, 0, 0, 4, 0, 0, 0, 0, 0),
    _row(0, 0, 2, 0, 2, 0, 0, 0, 0, 0),
)

_B: tuple[IntPoly, ...] = _row(
    X * 4, ONE + X * 3, IntPoly([2, 2]), X * 4, IntPoly([2, 2]),
    X * 4, IntPoly([2, 2]), X * 4, 4, 4,
)


def initial_vector() -> PgdVector:
    """The pgd-vector of the digon L_0: its single embedding is of class dd2."""
    return PgdVector([0, 0, 1, 0, 0, 0, 0, 0, 0, 0])


def production_matrix() -> ProductionMatrix:
    return _M


def bar_vector() -> tuple[IntPoly, ...]:
    return _B


def apply_production(v: PgdVector, m: ProductionMatrix | None = None) -> PgdVector:
    """Row-vector times matrix."""
    m = _M if m is None else m
    out = [ZERO] * 10
    for i, vi in enumerate(v.coords):
        if vi.is_zero():
            continue
        for j, mij in enumerate(m[i]):
            if not mij.is_zero():
                out[j] = out[j] + vi * mij
    return PgdVector(out)


def iter_symmetric_ladder_pgd(n_max: int | None = None) -> Iterator[PgdVector]:
    """Yield V_{L_0}, V_{L_1}, ... (up to ``n_max`` inclusive when given)."""
    v = initial_vector()
    n = 0
    while n_max is None or n <= n_max:
        yield v
        v = apply_production(v)
        n += 1


def symmetric_ladder_pgd(n: int) -> PgdVector:
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = initial_vector()
    for _ in range(n):
        v = apply_production(v)
    return v


def pgd_total(v: PgdVector) -> IntPoly:
    total = ZERO
    for c in v.coords:
        total = total + c
    return total


def bar_dot(v: PgdVector, b: Sequence[IntPoly] | None = None) -> IntPoly:
    b = _B if b is None else b
    total = ZERO
    for vi, bi in zip(v.coords, b):
        total = total + vi * bi
    return total


def ringel_genus_poly_matrix(n: int) -> GenusDistribution:
    """Genus distribution of RL_n as the bar dot product of V_{L_n}.

    A :class:`ValueError` from :class:`GenusDistribution` here means a bug in
    the tables, not bad input.
    """
    return GenusDistribution.from_poly(bar_dot(symmetric_ladder_pgd(n)))


def iter_ringel_matrix(n_max: int) -> Iterator[GenusDistribution]:
    for v in iter_symmetric_ladder_pgd(n_max):
        yield GenusDistribution.from_poly(bar_dot(v))
