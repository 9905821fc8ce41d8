"""Log-concavity checks for Ringel ladder genus polynomials.

``a(n, j)`` is the coefficient of x^j in Gamma_{RL_n}(x/2), i.e. g_j / 2^j, and
``f(n, j) = a(n, j)^2 - a(n, j-1) a(n, j+1)``. Log-concavity of the genus
distribution is equivalent to ``f(n, j) >= 0`` for every j.

Beyond the direct scan, this module rebuilds the polynomial machinery used to
argue nonnegativity for large n (the s0/s1/s2 polynomials, the n-derivatives
q_j of s2 after x = kn, the x-derivatives of the reduced s0, and the
n-derivatives h_j of p = s1 + 2^(n-2x) s0) and replays its checks. Exact
identities are reported as IDENTITY, sampled sign checks as REPLAY.

Derivatives of 2^(n-2x) in n bring in ln 2. It is carried as a formal
variable ``L`` and, for pointwise sign checks, replaced by the rational
enclosure from :func:`ln2_enclosure`.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactpoly import RatBiPoly, binom
from .report import FAIL, IDENTITY, PASS, REPLAY, Check, check

n_ = RatBiPoly.var("n")
x_ = RatBiPoly.var("x")
k_ = RatBiPoly.var("k", ("k",))


class InconclusiveSign(ArithmeticError):
    """An interval evaluation straddles zero; tighten the ln 2 enclosure."""


# -- coefficients ----------------------------------------------------------------


def _scaled_coeff_x8(n: int, j: int) -> int:
    # 8 * a(n, j), an integer
    if j < 0:
        return 0
    c1 = binom(n - j + 1, j - 1) + binom(n - j + 2, j - 1)
    return (8 * (binom(n - j, j) + binom(n - j + 1, j)) - c1) * 4 ** j + 8 * 2 ** n * c1


def scaled_coeff(n: int, j: int) -> Fraction:
    return Fraction(_scaled_coeff_x8(n, j), 8)


def f_val(n: int, j: int) -> Fraction:
    if j < 1:
        raise ValueError("j must be at least 1")
    a = [_scaled_coeff_x8(n, i) for i in (j - 1, j, j + 1)]
    return Fraction(a[1] * a[1] - a[0] * a[2], 64)


@dataclass(frozen=True)
class LcReport:
    n_max: int
    pairs_checked: int
    violations: tuple[tuple[int, int, Fraction], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _scan_range(bounds: tuple[int, int]) -> tuple[int, list]:
    lo, hi = bounds
    checked = 0
    bad = []
    for n in range(lo, hi):
        top = n // 2 + 1
        a = [_scaled_coeff_x8(n, j) for j in range(top + 2)]
        for j in range(1, top + 1):
            f64 = a[j] * a[j] - a[j - 1] * a[j + 1]
            checked += 1
            if f64 < 0:
                bad.append((n, j, Fraction(f64, 64)))
    return checked, bad


def lc_scan(n_max: int, workers: int = 1) -> LcReport:
    """Check f(n, j) >= 0 for 2 <= n <= n_max and 1 <= j <= n//2 + 1."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if workers <= 1:
        parts = [_scan_range((2, n_max + 1))]
    else:
        # later n are costlier; interleave by striding the cut points
        pieces = workers * 4
        cuts = [2 + round((n_max - 1) * (i / pieces) ** 0.5) for i in range(pieces + 1)]
        ranges = [(cuts[i], cuts[i + 1]) for i in range(pieces) if cuts[i] < cuts[i + 1]]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_range, ranges))
    checked = sum(c for c, _ in parts)
    bad = sorted(v for _, vs in parts for v in vs)
    return LcReport(n_max, checked, tuple(bad))


def f_half_closed_form(n: int) -> Fraction:
    """f(n, n/2) for even n as a closed-form polynomial times 4^n."""
    poly = (397 * n ** 6 + 9528 * n ** 5 + 102100 * n ** 4 + 619680 * n ** 3
            + 2315488 * n ** 2 + 5041152 * n + 5898240)
    return Fraction(4 ** n * poly, 1474560)


# -- the s polynomials --------------------------------------------------------------


def _s2(x3_sign: int) -> RatBiPoly:
    n, x = n_, x_
    return (
        256 * n * (n + 5) * (n + 4) * (n + 3) ** 2 * (n + 2) ** 2 * (n + 1) ** 2
        - 4 * (n + 3) * (n + 2) * (n + 1)
        * (848 * n ** 5 + 10503 * n ** 4 + 46749 * n ** 3 + 88974 * n ** 2 + 64168 * n + 7680) * x
        + (19140 * n ** 7 + 303416 * n ** 6 + 1959723 * n ** 5 + 6630515 * n ** 4
           + 12527817 * n ** 3 + 12930761 * n ** 2 + 6465660 * n + 1080000) * x ** 2
        + x3_sign * (59628 * n ** 6 + 799668 * n ** 5 + 4257252 * n ** 4 + 11406255 * n ** 3
                     + 15964242 * n ** 2 + 10757127 * n + 2565612) * x ** 3
        + (110781 * n ** 5 + 1228365 * n ** 4 + 5215302 * n ** 3
           + 10470267 * n ** 2 + 9734049 * n + 3223854) * x ** 4
        - (122760 * n ** 4 + 1099197 * n ** 3 + 3570660 * n ** 2 + 4898043 * n + 2323908) * x ** 5
        + (75141 * n ** 3 + 542916 * n ** 2 + 1286307 * n + 964224) * x ** 6
        - (19602 * n ** 2 + 137214 * n + 213840) * x ** 7
        + 19602 * x ** 8
    )


def s2_as_printed() -> RatBiPoly:
    """s2 with a plus sign on the x^3 term.

    This version does not satisfy the g identity; kept for comparison only.
    """
    return _s2(+1)


def _s1() -> RatBiPoly:
    n, x = n_, x_
    return (
        4 * n * (n + 4) * (n + 3) * (n + 2) * (n + 1) * (184 * n ** 2 + 595 * n + 538)
        - (288 * n ** 7 + 10832 * n ** 6 + 97908 * n ** 5 + 388214 * n ** 4 + 782118 * n ** 3
           + 803168 * n ** 2 + 363528 * n + 39360) * x
        + (3492 * n ** 6 + 66912 * n ** 5 + 417975 * n ** 4 + 1177485 * n ** 3
           + 1603200 * n ** 2 + 969000 * n + 174744) * x ** 2
        - (17964 * n ** 5 + 225066 * n ** 4 + 972648 * n ** 3 + 1831368 * n ** 2
           + 1476624 * n + 375000) * x ** 3
        + (50805 * n ** 4 + 445635 * n ** 3 + 1302147 * n ** 2 + 1485999 * n + 534402) * x ** 4
        - (85266 * n ** 3 + 519912 * n ** 2 + 949644 * n + 510462) * x ** 5
        + (84861 * n ** 2 + 331209 * n + 293922) * x ** 6
        - (46332 * n + 88938) * x ** 7
        + 10692 * x ** 8
    )


def reduced_s0() -> RatBiPoly:
    """s0 / (32 (x+1) (n-x)), a quartic in x."""
    n, x = n_, x_
    return (
        4 * (n + 4) * (n + 3) * (n + 2) ** 2 * (n + 1)
        - (20 * n ** 4 + 185 * n ** 3 + 616 * n ** 2 + 883 * n + 468) * x
        + (33 * n ** 3 + 222 * n ** 2 + 501 * n + 402) * x ** 2
        - (18 * n ** 2 + 90 * n + 144) * x ** 3
        + 18 * x ** 4
    )


@lru_cache(maxsize=None)
def s_polynomials() -> tuple[RatBiPoly, RatBiPoly, RatBiPoly]:
    """(s0, s1, s2) in the variables n and x.

    The x^3 coefficient of s2 enters with a minus sign. That is the sign for
    which the g identity holds and for which the factored q_8 and the
    n = 4 octics of q_7, q_6 and q_0 come out as stated.
    """
    s0 = 32 * (x_ + 1) * (n_ - x_) * reduced_s0()
    return s0, _s1(), _s2(-1)


def _g_lhs(n: int, j: int) -> Fraction:
    num = 64 * factorial(j) * factorial(j + 1) * factorial(n - 2 * j + 5) * factorial(n - 2 * j + 3)
    den = factorial(n - j) * factorial(n - j - 1)
    return f_val(n, j) * Fraction(num, den)


def _g_rhs(n: int, j: int, s2: RatBiPoly | None = None) -> Fraction:
    s0, s1, s2_ = s_polynomials()
    s2 = s2_ if s2 is None else s2
    return (16 ** j * s2(n=n, x=j)
            + 2 ** (n + 2 * j + 1) * j * (n - j + 1) * (s1(n=n, x=j) + 2 ** (n - 2 * j) * s0(n=n, x=j)))


def g_identity_check(n: int, s2: RatBiPoly | None = None) -> Check:
    """Compare both expressions for g_n(j) at every integer 1 <= j <= n//2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    for j in range(1, n // 2 + 1):
        lhs, rhs = _g_lhs(n, j), _g_rhs(n, j, s2)
        if lhs != rhs:
            return Check(f"g identity n={n}", FAIL, {"j": str(j), "lhs": str(lhs), "rhs": str(rhs)})
    return Check(f"g identity n={n}", IDENTITY, {"j_range": f"1..{n // 2}"})


# -- q_j: derivatives of s2 after x = kn -------------------------------------------


Q7_AT_4 = (98794080, -3852969120, 14855037120, -25338685680, 24057719280,
           -13647130560, 4616115840, -861376320, 68382720)
Q6_AT_4 = (395176320, -9243020160, 36108808560, -64328152320, 64252375200,
           -38420136000, 13701665520, -2694375360, 225239040)
Q0_AT_4 = (321159168, -4408639488, 20075655168, -46290382848, 62167349376,
           -50943602304, 25184659968, -6919073280, 812851200)
# highest power of k first


def _from_high_first(coeffs: Sequence[int]) -> RatBiPoly:
    out = RatBiPoly({}, ("k",))
    for c in coeffs:
        out = out * k_ + c
    return out


def q_polynomials() -> list[RatBiPoly]:
    """q_0..q_8, where q_j is the j-th n-derivative of s2(n, kn) / n."""
    s2 = s_polynomials()[2]
    s2_tilde = s2.subs({"x": RatBiPoly.var("k", ("n", "k")) * RatBiPoly.var("n", ("n", "k"))})
    s2_tilde = s2_tilde.divide_by_var("n")
    return [s2_tilde.diff("n", j) for j in range(9)]


def rational_grid(lo: Fraction, hi: Fraction, points: int) -> list[Fraction]:
    if points < 2:
        return [Fraction(lo)]
    step = Fraction(hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


def q_apparatus(grid: int = 101) -> list[Check]:
    qs = q_polynomials()
    out = []
    q8_expected = 40320 * (1 - 2 * k_) * (3 * k_ - 2) ** 2 * (33 * k_ ** 2 - 33 * k_ + 8) ** 2
    out.append(check("q8 = 40320(1-2k)(3k-2)^2(33k^2-33k+8)^2", qs[8] == q8_expected, IDENTITY,
                     q8=qs[8]))
    for j, shown in ((7, Q7_AT_4), (6, Q6_AT_4), (0, Q0_AT_4)):
        got = qs[j].subs({"n": 4})
        out.append(check(f"q{j} at n=4 matches octic", got == _from_high_first(shown), IDENTITY,
                         computed=got))
    ks = rational_grid(Fraction(0), Fraction(1, 2), grid)
    for j in range(8, -1, -1):
        at4 = qs[j].subs({"n": 4})
        worst = min(at4(k=k) for k in ks)
        out.append(check(f"q{j} at n=4 positive on k-grid [0,1/2]", worst > 0 if j < 8 else worst >= 0,
                         REPLAY, grid_points=grid, minimum=worst))
    return out


# -- reduced s0 and its x-derivatives ---------------------------------------------


def s0_positivity_replay(n_lo: int = 100, n_hi: int = 200) -> list[Check]:
    n = n_
    s0t = reduced_s0()
    half = {"x": Fraction(1, 2) * n}
    d = [s0t.diff("x", j) for j in range(5)]
    out = [
        check("reduced s0 (4th x-derivative) = 432", d[4] == 432, IDENTITY, value=d[4]),
        check("reduced s0 (3rd) = 432x - 108(n^2+5n+8)",
              d[3] == 432 * x_ - 108 * (n ** 2 + 5 * n + 8), IDENTITY),
        check("reduced s0 (2nd) = 6(11n^3+74n^2+167n+134) - 108(n^2+5n+8)x + 216x^2",
              d[2] == 6 * (11 * n ** 3 + 74 * n ** 2 + 167 * n + 134)
              - 108 * (n ** 2 + 5 * n + 8) * x_ + 216 * x_ ** 2, IDENTITY),
        check("reduced s0 (1st) displayed cubic in x",
              d[1] == -(20 * n ** 4 + 185 * n ** 3 + 616 * n ** 2 + 883 * n + 468)
              + 6 * (11 * n ** 3 + 74 * n ** 2 + 167 * n + 134) * x_
              - 54 * (n ** 2 + 5 * n + 8) * x_ ** 2 + 72 * x_ ** 3, IDENTITY),
    ]
    at_half = [dj.subs(half) for dj in d]
    quartic = n ** 4 + 43 * n ** 3 + 446 * n ** 2 + 962 * n + 936
    out += [
        check("reduced s0 (3rd) at x=n/2 = -108(n^2+3n+8)",
              at_half[3] == -108 * (n ** 2 + 3 * n + 8), IDENTITY, computed=at_half[3]),
        check("reduced s0 (2nd) at x=n/2 = 6(2n^3+38n^2+95n+134)",
              at_half[2] == 6 * (2 * n ** 3 + 38 * n ** 2 + 95 * n + 134), IDENTITY, computed=at_half[2]),
        check("reduced s0 (1st) at x=n/2 = -2(n^4+43n^3+446n^2+962n+936)",
              at_half[1] == -2 * quartic, IDENTITY, computed=at_half[1]),
        check("reduced s0 (1st) at x=n/2 = -(1/2)(n^4+43n^3+446n^2+962n+936)",
              at_half[1] == Fraction(-1, 2) * quartic, IDENTITY, computed=at_half[1]),
        check("reduced s0 at x=n/2 = (1/8)(7n^4+154n^3+1112n^2+2096n+1536)",
              at_half[0] == Fraction(1, 8) * (7 * n ** 4 + 154 * n ** 3 + 1112 * n ** 2 + 2096 * n + 1536),
              IDENTITY, computed=at_half[0]),
    ]
    s0 = s_polynomials()[0]
    worst = None
    for nn in range(n_lo, n_hi + 1):
        for j in range(nn // 2 + 1):
            v = s0(n=nn, x=j)
            if worst is None or v < worst[0]:
                worst = (v, nn, j)
    out.append(check(f"s0 >= 0 on integers n in [{n_lo},{n_hi}], 0 <= x <= n/2", worst[0] >= 0, REPLAY,
                     minimum=worst[0], at=f"n={worst[1]},x={worst[2]}"))
    return out


# -- h_j: n-derivatives of p = s1 + 2^(n-2x) s0 ----------------------------------


def ln2_enclosure(terms: int = 60) -> tuple[Fraction, Fraction]:
    """Rational bounds lo < ln 2 < hi.

    ln 2 = sum_{k>=1} 1/(k 2^k). All terms are positive, so the partial sum
    S_N is a lower bound, and the tail is at most
    sum_{k>N} 1/((N+1) 2^k) = 1/((N+1) 2^N).
    """
    s = sum(Fraction(1, k * 2 ** k) for k in range(1, terms + 1))
    return s, s + Fraction(1, (terms + 1) * 2 ** terms)


def interval_eval(coeffs: dict[int, Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Bounds of sum c_e L^e over L in [lo, hi] with lo > 0."""
    if lo <= 0:
        raise ValueError("enclosure must be positive")
    low = high = Fraction(0)
    for e, c in coeffs.items():
        small, big = lo ** e, hi ** e
        if c >= 0:
            low += c * small
            high += c * big
        else:
            low += c * big
            high += c * small
    return low, high


@lru_cache(maxsize=None)
def _n_derivatives() -> tuple[tuple[RatBiPoly, ...], tuple[RatBiPoly, ...]]:
    s0, s1, _ = s_polynomials()
    return (tuple(s0.diff("n", i) for i in range(9)), tuple(s1.diff("n", i) for i in range(9)))


def h_scaled_exponential_part(j: int) -> RatBiPoly:
    """sum_i C(j,i) L^(j-i) d^i s0/dn^i, the factor multiplying 2^(n-2x) in h_j."""
    d0, _ = _n_derivatives()
    L = RatBiPoly.var("L", ("n", "x", "L"))
    total = RatBiPoly({}, ("n", "x", "L"))
    for i in range(j + 1):
        if not d0[i].is_zero():
            total = total + binom(j, i) * L ** (j - i) * d0[i]
    return total


def h_in_L(j: int, n: Fraction, x: Fraction) -> dict[int, Fraction]:
    """h_j at (n, x) as {power of L: coefficient}; requires n - 2x to be an integer."""
    shift = n - 2 * x
    if shift.denominator != 1:
        raise ValueError("n - 2x must be an integer for an exact power of 2")
    e = int(shift)
    pow2 = Fraction(2) ** e
    d0, d1 = _n_derivatives()
    out: dict[int, Fraction] = {0: d1[j](n=n, x=x)}
    for i in range(j + 1):
        v = binom(j, i) * pow2 * d0[i](n=n, x=x)
        out[j - i] = out.get(j - i, Fraction(0)) + v
    return out


def p_value(n: int, x: int) -> Fraction:
    """p = s1 + 2^(n-2x) s0 at integers; exact, no ln 2 involved."""
    s0, s1, _ = s_polynomials()
    return s1(n=n, x=x) + Fraction(2) ** (n - 2 * x) * s0(n=n, x=x)


def default_x_samples(points: int = 101) -> list[Fraction]:
    return rational_grid(Fraction(49), Fraction(299), points)


def _h8_structure(lo: Fraction, hi: Fraction) -> list[Check]:
    _, d1 = _n_derivatives()
    out = [check("8th n-derivative of s1 vanishes", d1[8].is_zero(), IDENTITY)]
    expo = h_scaled_exponential_part(8)
    # n = y + 2 + 2x
    shifted = expo.subs({"n": RatBiPoly.var("y", ("y", "x", "L")) + 2 + 2 * RatBiPoly.var("x", ("y", "x", "L"))})
    shifted = shifted.with_vars(("y", "x", "L"))
    by_monomial: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (ey, ex, eL), c in shifted.terms.items():
        by_monomial.setdefault((ey, ex), {})[eL] = c
    literal = all(c >= 0 for cs in by_monomial.values() for c in cs.values())
    bounded = all(ey <= 6 and ex <= 7 - ey for ey, ex in by_monomial)
    out.append(check("2^(2x-n) h8 expanded in x and (n-2-2x): i <= 6, j <= 7-i", bounded, IDENTITY,
                     monomials=len(by_monomial)))
    if literal:
        out.append(Check("2^(2x-n) h8 coefficients nonnegative in Q[L]", IDENTITY,
                         {"monomials": str(len(by_monomial)), "held": "all coefficients nonnegative"}))
    else:
        worst = min(interval_eval(cs, lo, hi)[0] for cs in by_monomial.values())
        out.append(check("2^(2x-n) h8 coefficients nonnegative at L = ln 2", worst >= 0, REPLAY,
                         held="interval-positive at ln 2 only", minimum=worst))
    return out


def h_replay(x_samples: Iterable[Fraction] | None = None, n_policy: str = "boundary",
             ln2_terms: int = 60) -> list[Check]:
    """Replay the h_j sign checks.

    ``n_policy="boundary"`` evaluates at n = 2x + 2; ``"grid"`` also samples
    n = 2x + 2 + m for integers m up to x - 2, keeping n <= 3x.
    """
    if n_policy not in ("boundary", "grid"):
        raise ValueError(f"unknown n policy {n_policy!r}")
    lo, hi = ln2_enclosure(ln2_terms)
    out = [Check("ln 2 enclosure", PASS, {"lo": str(lo), "hi": str(hi),
                                          "width": f"{float(hi - lo):.3e}"})]
    out += _h8_structure(lo, hi)
    xs = [Fraction(v) for v in (default_x_samples() if x_samples is None else x_samples)]
    for x in xs:
        if x < 2:
            raise ValueError(f"sample x={x} lies outside n in [2x+2, 3x]")
    for j in range(7, -1, -1):
        worst = None
        evaluated = 0
        for x in xs:
            top = int(x - 2)
            if n_policy == "boundary":
                ms = [0]
            else:
                ms = sorted({top * t // 4 for t in range(5)})
            for m in ms:
                n = 2 * x + 2 + m
                low, high = interval_eval(h_in_L(j, n, x), lo, hi)
                evaluated += 1
                if low < 0 <= high:
                    raise InconclusiveSign(f"h_{j} at n={n}, x={x} lies in [{low}, {high}]")
                if worst is None or low < worst[0]:
                    worst = (low, n, x)
        out.append(check(f"h{j} >= 0 at sampled points ({n_policy})", worst[0] >= 0, REPLAY,
                         points=evaluated, lower_bound=f"{float(worst[0]):.6e}",
                         at=f"n={worst[1]},x={worst[2]}"))
    p = p_value(302, 100)
    out.append(check("p = h0 at (n, x) = (302, 100) >= 0", p >= 0, REPLAY, value=f"{float(p):.6e}"))
    for n in (102, 150, 300):
        s0, s1, _ = s_polynomials()
        lift = Fraction(2) ** (n // 3)
        vals = [(s1(n=n, x=x) + lift * s0(n=n, x=x), x) for x in range(n // 3 + 1)]
        worst = min(vals)
        out.append(check(f"p1 = s1 + 2^(n/3) s0 >= 0 for integer x in [0, n/3], n={n}", worst[0] >= 0,
                         REPLAY, minimum=f"{float(worst[0]):.6e}", at=f"x={worst[1]}"))
    return out


def proof_checks(g_range: Iterable[int] = range(100, 131), f_half_range: Iterable[int] = range(100, 121, 2),
                 grid: int = 101) -> list[Check]:
    """Everything that replays the large-n argument, in a fixed order."""
    out = [g_identity_check(n) for n in g_range]
    out.append(check("printed s2 (plus sign on x^3) fails the g identity at n=100",
                     g_identity_check(100, s2_as_printed()).status == FAIL, PASS))
    for n in f_half_range:
        out.append(check(f"f(n, n/2) closed form, n={n}", f_val(n, n // 2) == f_half_closed_form(n), IDENTITY))
    out += q_apparatus(grid)
    out += s0_positivity_replay()
    out += h_replay()
    return out
