"""Genus distributions of symmetric ladders and Ringel ladders, computed exactly."""

from .closed_form import chebyshev_u, gf_series, pgd_generating_components, ringel_closed_form
from .exactpoly import GenusDistribution, IntPoly, RatBiPoly, is_log_concave, is_unimodal
from .oracle import build_ringel_ladder, build_symmetric_ladder, oracle_genus_distribution, oracle_pgd
from .pgd import PgdClass, PgdVector, ringel_genus_poly_matrix, symmetric_ladder_pgd

__all__ = [
    "GenusDistribution", "IntPoly", "PgdClass", "PgdVector", "RatBiPoly",
    "build_ringel_ladder", "build_symmetric_ladder", "chebyshev_u", "gf_series",
    "is_log_concave", "is_unimodal", "oracle_genus_distribution", "oracle_pgd",
    "pgd_generating_components", "ringel_closed_form", "ringel_genus_poly_matrix",
    "symmetric_ladder_pgd",
]
