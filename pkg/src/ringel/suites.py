"""Named verification suites run by ``ringel verify``."""

from __future__ import annotations

from collections.abc import Callable

from . import closed_form, lcverify, oracle, pgd
from .fixtures import RINGEL_GENUS, SYMMETRIC_LADDER_PGD
from .report import IDENTITY, PASS, Check, check

SUITES = ("examples", "oracle", "crossmethod", "productions", "proof")


def examples_suite(slow: bool = False, workers: int = 1) -> list[Check]:
    out = []
    for n, want in enumerate(SYMMETRIC_LADDER_PGD):
        got = pgd.symmetric_ladder_pgd(n)
        out.append(check(f"V_L{n} by matrix iteration", got == want, got=got))
    gf = closed_form.gf_series(len(RINGEL_GENUS))
    for n, want in enumerate(RINGEL_GENUS):
        for method, got in (("matrix", pgd.ringel_genus_poly_matrix(n)),
                            ("closed", closed_form.ringel_closed_form(n)),
                            ("gf", gf[n])):
            out.append(check(f"Gamma_RL{n} by {method}", got.coeffs == want, got=list(got.coeffs)))
    return out


def oracle_suite(slow: bool = False, workers: int = 1) -> list[Check]:
    pgd_top, ringel_top = (6, 7) if slow else (4, 5)
    out = []
    for n in range(pgd_top + 1):
        got = oracle.oracle_pgd(n, workers=workers)
        want = pgd.symmetric_ladder_pgd(n)
        out.append(check(f"oracle pgd L{n} = matrix", got == want, embeddings=4 ** n))
    for n in range(ringel_top + 1):
        got = oracle.oracle_genus_distribution(oracle.build_ringel_ladder(n), workers=workers)
        want = pgd.ringel_genus_poly_matrix(n)
        out.append(check(f"oracle Gamma_RL{n} = matrix", got == want,
                         embeddings=4 ** (n + 1), coeffs=list(got.coeffs)))
    return out


def crossmethod_suite(slow: bool = False, workers: int = 1, n_max: int = 200) -> list[Check]:
    gf = closed_form.gf_series(n_max + 1)
    comps = closed_form.pgd_generating_components(n_max + 1)
    bad_methods, bad_pgd, bad_counts = [], [], []
    for n, v in enumerate(pgd.iter_symmetric_ladder_pgd(n_max)):
        matrix = pgd.bar_dot(v)
        if not (matrix == closed_form.ringel_closed_form(n).to_poly() == gf[n].to_poly()):
            bad_methods.append(n)
        if comps.vector(n) != v:
            bad_pgd.append(n)
        if pgd.pgd_total(v)(1) != 4 ** n or matrix(1) != 4 ** (n + 1):
            bad_counts.append(n)
    return [
        check(f"matrix = closed form = generating function, n <= {n_max}", not bad_methods,
              IDENTITY, failing=bad_methods[:5]),
        check(f"a/b/c series reconstruct V_L n, n <= {n_max}", not bad_pgd, IDENTITY, failing=bad_pgd[:5]),
        check(f"embedding counts 4^n and 4^(n+1), n <= {n_max}", not bad_counts, IDENTITY,
              failing=bad_counts[:5]),
    ]


def productions_suite(slow: bool = False, workers: int = 1) -> list[Check]:
    # n = 4 is the first ladder with an ss0 embedding, so include it
    top = 5 if slow else 4
    out = []
    rows, bars = set(), set()
    for n in range(top + 1):
        r = oracle.replay_productions(n)
        rows.update(r.classes_seen)
        out.append(check(f"rung surgery on L{n} matches production rows", r.ok,
                         embeddings=r.embeddings, classes=",".join(r.classes_seen),
                         mismatches=len(r.mismatches)))
        b = oracle.replay_bar(n)
        bars.update(b.classes_seen)
        out.append(check(f"bar surgery on L{n} matches bar vector", b.ok,
                         embeddings=b.embeddings, mismatches=len(b.mismatches)))
    out.append(check("every production row exercised", len(rows) == 10, PASS, classes=",".join(sorted(rows))))
    out.append(check("every bar entry exercised", len(bars) == 10, PASS, classes=",".join(sorted(bars))))
    return out


def proof_suite(slow: bool = False, workers: int = 1) -> list[Check]:
    scan = lcverify.lc_scan(99, workers=workers)
    out = [check("f(n, j) >= 0 for 2 <= n <= 99", scan.ok, PASS, pairs=scan.pairs_checked)]
    return out + lcverify.proof_checks()


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "examples": examples_suite,
    "oracle": oracle_suite,
    "crossmethod": crossmethod_suite,
    "productions": productions_suite,
    "proof": proof_suite,
}


def run_suite(name: str, slow: bool = False, workers: int = 1) -> list[Check]:
    return RUNNERS[name](slow=slow, workers=workers)
