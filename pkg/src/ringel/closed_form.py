"""Closed forms for Ringel ladder genus polynomials.

Three routes that do not touch the production matrix:

* :func:`ringel_closed_form` -- the two binomial sums,
* :func:`gf_series` -- coefficient extraction from the rational generating
  function by its two-term recurrences,
* :func:`pgd_generating_components` -- the a/b/c series whose shifts give
  every pgd coordinate.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .exactpoly import ONE, X, ZERO, GenusDistribution, IntPoly, binom
from .pgd import PgdVector


def chebyshev_u(p: int) -> IntPoly:
    """U_p by the three-term recurrence U_p = 2x U_{p-1} - U_{p-2}."""
    if p < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    prev, cur = ONE, X * 2
    if p == 0:
        return prev
    for _ in range(p - 1):
        prev, cur = cur, X * 2 * cur - prev
    return cur


def chebyshev_u_explicit(p: int) -> IntPoly:
    """U_p from the alternating binomial sum; independent of the recurrence."""
    out = ZERO
    for j in range(p // 2 + 1):
        out = out + IntPoly.monomial((-1) ** j * binom(p - j, j) * 2 ** (p - 2 * j), p - 2 * j)
    return out


def _bsum(n: int, j: int) -> int:
    return binom(n - j, j) + binom(n - j + 1, j)


def ringel_closed_form(n: int) -> GenusDistribution:
    if n < 0:
        raise ValueError("n must be nonnegative")
    first = IntPoly([_bsum(n, j) * 8 ** j for j in range(n + 2)])
    second = IntPoly([_bsum(n, j) * 2 ** j for j in range(n + 2)])
    gamma = (ONE - X) * first + (X * 2 ** (n + 1)) * second
    return GenusDistribution.from_poly(gamma)


def gf_series(count: int) -> list[GenusDistribution]:
    """Gamma_{RL_0}, ..., Gamma_{RL_{count-1}} from the generating function.

    The two pieces 2(1-x)(1+4xt)/(1-t-8xt^2) and 4x(1+2xt)/(1-2t-8xt^2)
    satisfy c_n = c_{n-1} + 8x c_{n-2} and d_n = 2 d_{n-1} + 8x d_{n-2}
    once their first two terms are fixed by the numerators.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    eight_x = X * 8
    c = [(ONE - X) * 2]
    c.append(c[0] + (ONE - X) * X * 8)
    d = [X * 4]
    d.append(d[0] * 2 + X * X * 8)
    for n in range(2, count):
        c.append(c[n - 1] + eight_x * c[n - 2])
        d.append(d[n - 1] * 2 + eight_x * d[n - 2])
    return [GenusDistribution.from_poly(c[n] + d[n]) for n in range(count)]


def _series(numerator: Sequence[IntPoly], denominator: Sequence[IntPoly], count: int) -> list[IntPoly]:
    # power series in t with IntPoly coefficients; denominator[0] must be 1
    if denominator[0] != ONE:
        raise ValueError("denominator must have constant term 1")
    out: list[IntPoly] = []
    for m in range(count):
        s = numerator[m] if m < len(numerator) else ZERO
        for k in range(1, min(m, len(denominator) - 1) + 1):
            s = s - denominator[k] * out[m - k]
        out.append(s)
    return out


def _tpoly_mul(p: Sequence[IntPoly], q: Sequence[IntPoly]) -> list[IntPoly]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


@dataclass(frozen=True)
class PgdSeries:
    """t-coefficients of a, b, c; ``a[n]`` is the coefficient of t^n."""

    a: tuple[IntPoly, ...]
    b: tuple[IntPoly, ...]
    c: tuple[IntPoly, ...]

    def vector(self, n: int) -> PgdVector:
        """V_{L_n} from (a, b, c, 2xta, 2xtb, 2xta, 2xtb, 4x^2t^2a, 4x^2t^2b, 2xtc)."""

        def at(seq, k):
            return seq[k] if 0 <= k < len(seq) else ZERO

        if n >= len(self.a):
            raise IndexError(f"series only computed to t^{len(self.a) - 1}")
        two_x, four_x2 = X * 2, X * X * 4
        return PgdVector([
            at(self.a, n), at(self.b, n), at(self.c, n),
            two_x * at(self.a, n - 1), two_x * at(self.b, n - 1),
            two_x * at(self.a, n - 1), two_x * at(self.b, n - 1),
            four_x2 * at(self.a, n - 2), four_x2 * at(self.b, n - 2),
            two_x * at(self.c, n - 1),
        ])


def pgd_generating_components(count: int) -> PgdSeries:
    if count < 1:
        raise ValueError("count must be at least 1")
    # 1 - 2t - 8xt^2, 1 - t - 8xt^2, 1 - 4xt^2
    d1 = [ONE, IntPoly([-2]), X * -8]
    d2 = [ONE, IntPoly([-1]), X * -8]
    d3 = [ONE, ZERO, X * -4]
    a = _series([ZERO, ZERO, IntPoly([2])], _tpoly_mul(_tpoly_mul(d1, d2), d3), count)
    b = _series([ZERO, IntPoly([2])], _tpoly_mul(d2, d3), count)
    c = _series([ONE], d3, count)
    return PgdSeries(tuple(a), tuple(b), tuple(c))
