"""Exact polynomial arithmetic and sequence-shape predicates.

Two polynomial types live here:

* :class:`IntPoly` -- dense univariate polynomial over the integers. Coefficient
  ``i`` is the coefficient of ``x**i``. Used for genus polynomials, the
  entries of the production matrix and Chebyshev polynomials.
* :class:`RatBiPoly` -- sparse polynomial over the rationals in named
  variables (``n`` and ``x`` by default, others such as ``k`` or ``L`` appear
  after substitution).

Nothing in this module rounds. Integers are Python ints, rationals are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from math import comb
from typing import Union

Rational = Union[int, Fraction]


class IntPoly:
    """Immutable dense polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, coeff: int, power: int) -> IntPoly:
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = str(c)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                mono = xs if c == 1 else ("-" + xs if c == -1 else f"{c}{xs}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


X = IntPoly([0, 1])
ZERO = IntPoly()
ONE = IntPoly([1])


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# -- sequences ---------------------------------------------------------------


def has_internal_zeros(seq: Sequence[int]) -> bool:
    nz = [i for i, a in enumerate(seq) if a != 0]
    if not nz:
        return False
    return any(seq[k] == 0 for k in range(nz[0], nz[-1] + 1))


class GenusDistribution:
    """Nonnegative integer sequence without internal zeros.

    Index ``i`` counts embeddings in the orientable surface of genus ``i``.
    Construction raises :class:`ValueError` if either invariant fails.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if any(c < 0 for c in cs):
            raise ValueError(f"negative entry in genus distribution {cs}")
        if has_internal_zeros(cs):
            raise ValueError(f"internal zero in genus distribution {cs}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("GenusDistribution is immutable")

    @classmethod
    def from_poly(cls, p: IntPoly) -> GenusDistribution:
        return cls(p.coeffs)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, GenusDistribution):
            return self.coeffs == other.coeffs
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("GenusDistribution", self.coeffs))

    def __repr__(self) -> str:
        return f"GenusDistribution({list(self.coeffs)!r})"


def is_log_concave(seq: Sequence[int] | GenusDistribution) -> bool:
    """True iff ``a[k-1] * a[k+1] <= a[k]**2`` for every interior ``k``."""
    a = list(seq)
    return all(a[k - 1] * a[k + 1] <= a[k] * a[k] for k in range(1, len(a) - 1))


def is_unimodal(seq: Sequence[int] | GenusDistribution) -> bool:
    a = list(seq)
    k = 0
    while k + 1 < len(a) and a[k] <= a[k + 1]:
        k += 1
    while k + 1 < len(a) and a[k] >= a[k + 1]:
        k += 1
    return k + 1 >= len(a)


# -- multivariate rationals --------------------------------------------------


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


class RatBiPoly:
    """Sparse polynomial with rational coefficients in named variables.

    The default variables are ``("n", "x")``; the exponent tuple of each term
    follows :attr:`vars`. Substituting ``x -> k*n`` produces a polynomial in
    ``("n", "k")`` and the ln 2 apparatus adds a formal variable ``L``, so the
    variable list is open rather than fixed at two.

    Equality ignores variables that do not occur.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], Rational] | None = None,
                 vars: Sequence[str] = ("n", "x")):
        vs = tuple(vars)
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated variable in {vs}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(vs):
                raise ValueError(f"exponent {exps} does not match variables {vs}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent {exps}")
            c = _as_fraction(c)
            if c:
                key = tuple(int(e) for e in exps)
                s = clean.get(key, 0) + c
                if s:
                    clean[key] = s
                else:
                    clean.pop(key, None)
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("RatBiPoly is immutable")

    # construction

    @classmethod
    def var(cls, name: str, vars: Sequence[str] = ("n", "x")) -> RatBiPoly:
        vs = tuple(vars) if name in vars else tuple(vars) + (name,)
        exps = tuple(1 if v == name else 0 for v in vs)
        return cls({exps: 1}, vs)

    @classmethod
    def const(cls, c: Rational, vars: Sequence[str] = ("n", "x")) -> RatBiPoly:
        return cls({(0,) * len(vars): c}, vars)

    # variable bookkeeping

    def with_vars(self, vars: Sequence[str]) -> RatBiPoly:
        """Re-express over ``vars``, which must include every occurring variable."""
        vs = tuple(vars)
        used = self.occurring_vars()
        missing = [v for v in used if v not in vs]
        if missing:
            raise ValueError(f"variables {missing} occur but are not in {vs}")
        idx = [self.vars.index(v) if v in self.vars else None for v in vs]
        terms = {tuple(e[i] if i is not None else 0 for i in idx): c
                 for e, c in self.terms.items()}
        return RatBiPoly(terms, vs)

    def occurring_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars)
                     if any(e[i] for e in self.terms))

    def _aligned(self, other: RatBiPoly) -> tuple[RatBiPoly, RatBiPoly]:
        if self.vars == other.vars:
            return self, other
        vs = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def _coerce(self, other) -> RatBiPoly | None:
        if isinstance(other, RatBiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatBiPoly.const(other, self.vars)
        return None

    # arithmetic

    def __add__(self, other) -> RatBiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return RatBiPoly(terms, a.vars)

    __radd__ = __add__

    def __neg__(self) -> RatBiPoly:
        return RatBiPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other) -> RatBiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatBiPoly:
        return (-self) + other

    def __mul__(self, other) -> RatBiPoly:
        if isinstance(other, (int, Fraction)):
            return RatBiPoly({e: c * other for e, c in self.terms.items()}, self.vars)
        if not isinstance(other, RatBiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return RatBiPoly(terms, a.vars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RatBiPoly:
        if e < 0:
            raise ValueError("negative power")
        result = RatBiPoly.const(1, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(frozenset(self._canonical().items()))

    def _canonical(self) -> dict:
        return {tuple((v, k) for v, k in zip(self.vars, e) if k): c
                for e, c in self.terms.items()}

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"RatBiPoly({self._canonical()!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}"
                            for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # calculus and evaluation

    def degree(self, var: str) -> int | None:
        """Degree in ``var``; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def diff(self, var: str, order: int = 1) -> RatBiPoly:
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        if order == 0:
            return self
        if var not in self.vars:
            return RatBiPoly({}, self.vars)
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < order:
                continue
            falling = 1
            for t in range(order):
                falling *= k - t
            ne = e[:i] + (k - order,) + e[i + 1:]
            terms[ne] = c * falling
        return RatBiPoly(terms, self.vars)

    def coefficients(self, var: str) -> dict[int, RatBiPoly]:
        """Split as ``sum_k coeff_k * var**k``; returns ``{k: coeff_k}``."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            buckets.setdefault(e[i], {})[ne] = c
        return {k: RatBiPoly(t, self.vars) for k, t in buckets.items()}

    def divide_by_var(self, var: str) -> RatBiPoly:
        """Exact division by ``var``; raises if some term lacks the factor."""
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                raise ValueError(f"not divisible by {var}")
            terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c
        return RatBiPoly(terms, self.vars)

    def subs(self, mapping: Mapping[str, RatBiPoly | Rational]) -> RatBiPoly:
        """Simultaneous substitution of variables by polynomials or rationals."""
        targets = {v: val for v, val in mapping.items() if v in self.vars}
        keep = tuple(v for v in self.vars if v not in targets)
        result_vars = list(keep)
        for val in targets.values():
            if isinstance(val, RatBiPoly):
                result_vars += [v for v in val.vars if v not in result_vars]
        rv = tuple(result_vars)
        images = {}
        for v, val in targets.items():
            if isinstance(val, RatBiPoly):
                images[v] = val.with_vars(rv)
            else:
                images[v] = RatBiPoly.const(val, rv)
        power_cache: dict[tuple[str, int], RatBiPoly] = {}

        def power(v: str, k: int) -> RatBiPoly:
            key = (v, k)
            if key not in power_cache:
                power_cache[key] = images[v] ** k
            return power_cache[key]

        out = RatBiPoly({}, rv)
        for e, c in self.terms.items():
            mono_exps = [0] * len(rv)
            factor = RatBiPoly.const(c, rv)
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                if v in images:
                    factor = factor * power(v, k)
                else:
                    mono_exps[rv.index(v)] = k
            out = out + factor * RatBiPoly({tuple(mono_exps): 1}, rv)
        return out

    def __call__(self, **values: Rational) -> Fraction:
        """Evaluate at rational values for every occurring variable."""
        missing = [v for v in self.occurring_vars() if v not in values]
        if missing:
            raise ValueError(f"no value for {missing}")
        vals = [_as_fraction(values[v]) if v in values else Fraction(0)
                for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for val, k in zip(vals, e):
                if k:
                    t *= val ** k
            total += t
        return total

    def constant_value(self) -> Fraction:
        """Value of a polynomial with no occurring variables."""
        if self.occurring_vars():
            raise ValueError(f"polynomial still depends on {self.occurring_vars()}")
        return sum(self.terms.values(), Fraction(0))

    def univariate_coeffs(self, var: str) -> list[Fraction]:
        """Coefficient list, lowest degree first, of a polynomial in ``var`` alone."""
        others = [v for v in self.occurring_vars() if v != var]
        if others:
            raise ValueError(f"polynomial also depends on {others}")
        parts = self.coefficients(var)
        if not parts:
            return []
        return [parts[k].constant_value() if k in parts else Fraction(0)
                for k in range(max(parts) + 1)]


def bipoly_diff(p: RatBiPoly, var: str, order: int) -> RatBiPoly:
    return p.diff(var, order)


def bipoly_subst(p: RatBiPoly, substitution: Mapping[str, RatBiPoly | Rational]) -> RatBiPoly:
    return p.subs(substitution)
