"""Published small cases, written out by hand."""

from .exactpoly import IntPoly
from .pgd import PgdVector


def _p(*cs: int) -> IntPoly:
    return IntPoly(cs)


# V_{L_0} .. V_{L_4} in order dd0 dd1 dd2 ds0 ds1 sd0 sd1 ss0 ss1 ss2
SYMMETRIC_LADDER_PGD = (
    PgdVector([0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    PgdVector([0, 2, 0, 0, 0, 0, 0, 0, 0, _p(0, 2)]),
    PgdVector([2, 2, _p(0, 4), 0, _p(0, 4), 0, _p(0, 4), 0, 0, 0]),
    PgdVector([6, _p(2, 24), 0, _p(0, 4), _p(0, 4), _p(0, 4), _p(0, 4), 0, _p(0, 0, 8), _p(0, 0, 8)]),
    PgdVector([_p(14, 40), _p(2, 40), _p(0, 0, 16), _p(0, 12), _p(0, 4, 48),
               _p(0, 12), _p(0, 4, 48), _p(0, 0, 8), _p(0, 0, 8), 0]),
)

# Gamma_{RL_0} .. Gamma_{RL_4}
RINGEL_GENUS = (
    (2, 2),
    (2, 14),
    (2, 38, 24),
    (2, 70, 184),
    (2, 118, 648, 256),
)
