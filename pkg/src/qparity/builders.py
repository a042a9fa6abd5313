"""Declarative q-products, theta series and Slater-type sums.

Everything is a small frozen spec that can be expanded either exactly
(:func:`expand`) or directly mod 2 (:func:`expand_parity`).  The specs double
as documentation: ``str(spec)`` renders the usual q-Pochhammer notation.

A binomial factor is always ``1 + sign*q^e`` with ``e >= 1``, so the only
division ever needed is by such a factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from . import series as S
from .series import ParitySeries, Series

__all__ = [
    "FactorSpec",
    "ProductSpec",
    "ThetaSpec",
    "GFTermSpec",
    "SlaterSum",
    "LinComb",
    "Prod",
    "QuadSum",
    "poch",
    "build_product",
    "build_theta",
    "theta_product",
    "theta_product_spec",
    "build_slater_sum",
    "expand",
    "expand_parity",
]

Affine = tuple  # (p, r) meaning p*n + r


def _affine(v) -> tuple[int, int]:
    if isinstance(v, int):
        return (0, v)
    p, r = v
    return (int(p), int(r))


def _eval(aff, n):
    return aff[0] * n + aff[1]


def _fmt_affine(aff, var="n"):
    p, r = aff
    if p == 0:
        return str(r)
    head = var if p == 1 else f"{p}{var}"
    if r == 0:
        return head
    return f"{head}{'+' if r > 0 else '-'}{abs(r)}"


# -- ring adapters: the builders are written once and run over either ring --

class _Exact:
    mod2 = False

    @staticmethod
    def one(N):
        return S.one(N)

    @staticmethod
    def zero(N):
        return S.zero(N)

    @staticmethod
    def monomial(N, e, c=1):
        return S.make(N, [(e, c)])

    mul_binomial = staticmethod(S.mul_binomial)
    div_binomial = staticmethod(S.div_binomial)
    mul = staticmethod(S.mul)
    add = staticmethod(S.add)

    @staticmethod
    def lincomb(N, pairs):
        acc = S.zero(N)
        for c, s in pairs:
            acc = S.add(acc, S.scale(s, c))
        return acc

    @staticmethod
    def from_terms(N, exps_and_coeffs):
        acc = {}
        for e, c in exps_and_coeffs:
            acc[e] = acc.get(e, 0) + c
        return S.make(N, [(e, c) for e, c in acc.items() if c])


class _Parity:
    mod2 = True

    @staticmethod
    def one(N):
        return ParitySeries(N, 1)

    @staticmethod
    def zero(N):
        return ParitySeries(N, 0)

    @staticmethod
    def monomial(N, e, c=1):
        return ParitySeries(N, (c & 1) << e)

    mul_binomial = staticmethod(S.parity_mul_binomial)
    div_binomial = staticmethod(S.parity_div_binomial)
    mul = staticmethod(S.parity_mul)
    add = staticmethod(S.parity_add)

    @staticmethod
    def lincomb(N, pairs):
        bits = 0
        for c, s in pairs:
            if c & 1:
                bits ^= s.bits
        return ParitySeries(N, bits)

    @staticmethod
    def from_terms(N, exps_and_coeffs):
        bits = 0
        for e, c in exps_and_coeffs:
            if c & 1:
                bits ^= 1 << e
        return ParitySeries(N, bits)


# -- specs --

@dataclass(frozen=True)
class FactorSpec:
    """prod_{k < count} (1 + sign*q^(first + k*step)), in numerator or denominator.

    ``first`` and ``count`` may be affine in an outer summation index n,
    given as ``(p, r)`` for p*n + r; plain ints are constants.
    ``count=None`` means the product is infinite.
    """

    sign: int
    first: Affine
    step: int = 1
    count: Optional[Affine] = None
    denom: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        object.__setattr__(self, "first", _affine(self.first))
        if self.count is not None:
            object.__setattr__(self, "count", _affine(self.count))

    @property
    def depends_on_index(self) -> bool:
        return self.first[0] != 0 or (self.count is not None and self.count[0] != 0)

    def exponents(self, n: int, N: int) -> list[int]:
        """Binomial exponents at outer index n, stopping once they pass N."""
        e0 = _eval(self.first, n)
        if self.count is None:
            if e0 < 1:
                raise ValueError(f"factor {self} has exponent {e0} < 1 at n={n}")
            return list(range(e0, N + 1, self.step))
        cnt = _eval(self.count, n)
        if cnt < 0:
            raise ValueError(f"factor {self} has negative length {cnt} at n={n}")
        if cnt == 0:
            return []
        if e0 < 1:
            raise ValueError(f"factor {self} has exponent {e0} < 1 at n={n}")
        return list(range(e0, min(N, e0 + (cnt - 1) * self.step) + 1, self.step))

    def __str__(self):
        a = f"{'-' if self.sign > 0 else ''}q^{{{_fmt_affine(self.first)}}}"
        base = "q" if self.step == 1 else f"q^{self.step}"
        cnt = "inf" if self.count is None else _fmt_affine(self.count)
        body = f"({a};{base})_{{{cnt}}}"
        return f"1/{body}" if self.denom else body


def poch(sign, first, step=1, count=None, denom=False) -> FactorSpec:
    """Shorthand: ``poch(-1, 1)`` is (q;q)_inf, ``poch(+1, 1, 2, (1, 0))`` is (-q;q^2)_n."""
    return FactorSpec(sign, first, step, count, denom)


@dataclass(frozen=True)
class ProductSpec:
    """A finite list of index-free factors."""

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.depends_on_index:
                raise ValueError(f"product factor {f} depends on a summation index")

    def __str__(self):
        return " ".join(map(str, self.factors)) or "1"


_WEIGHTS = ("plain", "alternating", "cube")
_DOMAINS = ("all", "nonneg")


@dataclass(frozen=True)
class ThetaSpec:
    """sum_n w(n) q^((P n^2 + (P - 2r) n)/2).

    weight: ``plain`` (w = 1), ``alternating`` (w = (-1)^n) or ``cube``
    (w = (-1)^n (2n+1), only over n >= 0).  domain ``all`` sums over every
    integer and needs 0 < r < P; ``nonneg`` sums over n >= 0 and allows
    0 <= r <= P, e.g. ThetaSpec(1, 0, domain="nonneg") is the triangular sum.
    The exponent P n(n+1)/2 - r n is always an integer.
    """

    P: int
    r: int
    weight: str = "plain"
    domain: str = "all"

    def __post_init__(self):
        if self.weight not in _WEIGHTS:
            raise ValueError(f"unknown theta weight {self.weight!r}")
        if self.domain not in _DOMAINS:
            raise ValueError(f"unknown theta domain {self.domain!r}")
        if self.weight == "cube" and self.domain != "nonneg":
            raise ValueError("cube-weighted theta is a one-sided sum (domain='nonneg')")
        if self.P < 1:
            raise ValueError(f"P must be positive, got {self.P}")
        if self.domain == "all" and not 0 < self.r < self.P:
            raise ValueError(f"need 0 < r < P for a two-sided theta, got P={self.P}, r={self.r}")
        if self.domain == "nonneg" and not 0 <= self.r <= self.P:
            raise ValueError(f"need 0 <= r <= P for a one-sided theta, got P={self.P}, r={self.r}")

    @classmethod
    def cube(cls):
        return cls(1, 0, "cube", "nonneg")

    @classmethod
    def triangular(cls):
        return cls(1, 0, "plain", "nonneg")

    def exponent(self, n: int) -> int:
        return (self.P * n * n + (self.P - 2 * self.r) * n) // 2

    def weight_at(self, n: int) -> int:
        if self.weight == "plain":
            return 1
        sgn = -1 if n % 2 else 1
        return sgn if self.weight == "alternating" else sgn * (2 * n + 1)

    def terms(self, N: int):
        """(exponent, weight) for every n whose exponent is <= N."""
        out = []
        n = 0
        while self.exponent(n) <= N:
            out.append((self.exponent(n), self.weight_at(n)))
            n += 1
        if self.domain == "all":
            n = -1
            while self.exponent(n) <= N:
                out.append((self.exponent(n), self.weight_at(n)))
                n -= 1
        return out

    def __str__(self):
        w = {"plain": "", "alternating": "(-1)^n ", "cube": "(-1)^n (2n+1) "}[self.weight]
        rng = "n in Z" if self.domain == "all" else "n >= 0"
        return f"sum_{{{rng}}} {w}q^(({self.P}n^2{self.P - 2 * self.r:+d}n)/2)"


@dataclass(frozen=True)
class GFTermSpec:
    """sum_{n_start <= n <= n_stop} sign(n) q^(a n^2 + b n + c) * factors(n)."""

    n_start: int
    lead: tuple
    factors: tuple = ()
    alternating: bool = False
    n_stop: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        a, b, c = (tuple(self.lead) + (0, 0, 0))[:3]
        object.__setattr__(self, "lead", (int(a), int(b), int(c)))
        if self.n_start < 0:
            raise ValueError("n_start must be >= 0")
        if self.n_stop is None and (a < 0 or (a == 0 and b <= 0)):
            raise ValueError(f"lead exponent {self.lead} never exceeds the truncation order")

    def exponent(self, n: int) -> int:
        a, b, c = self.lead
        return a * n * n + b * n + c

    def indices(self, N: int):
        """Summation indices whose lead exponent is <= N."""
        a, b, _ = self.lead
        n = self.n_start
        while self.n_stop is None or n <= self.n_stop:
            e = self.exponent(n)
            rising = 2 * a * n + a + b > 0  # e(n+1) > e(n) from here on
            if e <= N:
                yield n
            elif rising:
                return
            n += 1

    def __str__(self):
        a, b, c = self.lead
        sgn = "(-1)^n " if self.alternating else ""
        rng = f"n>={self.n_start}" + ("" if self.n_stop is None else f", n<={self.n_stop}")
        body = " ".join(map(str, self.factors))
        return f"sum_{{{rng}}} {sgn}q^({a}n^2{b:+d}n{c:+d}) {body}".rstrip()


@dataclass(frozen=True)
class SlaterSum:
    """prefactor * (sum of GF terms)."""

    prefactor: ProductSpec = field(default_factory=ProductSpec)
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __str__(self):
        inner = " + ".join(map(str, self.terms)) or "0"
        pre = str(self.prefactor)
        return inner if pre == "1" else f"{pre} [{inner}]"


@dataclass(frozen=True)
class LinComb:
    """Integer linear combination of expressions: ``((coef, expr), ...)``."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple((int(c), e) for c, e in self.parts))

    def __str__(self):
        return " + ".join(f"{c}*[{e}]" if c != 1 else f"[{e}]" for c, e in self.parts)


@dataclass(frozen=True)
class Prod:
    """Product of expressions."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def __str__(self):
        return " * ".join(f"[{e}]" for e in self.parts)


@dataclass(frozen=True)
class QuadSum:
    """sum_{n in Z} q^(a n^2 + b n + c), or over n >= 0 when ``nonneg``.

    Covers the shifted theta pieces such as q^((2n+1)(3n+2)) that the
    (P, r) parametrisation of :class:`ThetaSpec` cannot express.
    """

    a: int
    b: int
    c: int = 0
    nonneg: bool = False

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"leading coefficient must be positive, got {self.a}")
        v = -self.b // (2 * self.a)
        if min(self.exponent(v), self.exponent(v + 1)) < 0:
            raise ValueError(f"{self} has negative exponents")

    def exponent(self, n):
        return self.a * n * n + self.b * n + self.c

    def terms(self, N):
        # exponents fall towards the vertex v and rise after v + 1
        v = -self.b // (2 * self.a)
        out = []
        n = v
        while n <= v + 1 or self.exponent(n) <= N:
            if self.exponent(n) <= N and (n >= 0 or not self.nonneg):
                out.append((self.exponent(n), 1))
            n += 1
        n = v - 1
        while self.exponent(n) <= N and (n >= 0 or not self.nonneg):
            out.append((self.exponent(n), 1))
            n -= 1
        return out

    def __str__(self):
        rng = "n >= 0" if self.nonneg else "n in Z"
        return f"sum_{{{rng}}} q^({self.a}n^2{self.b:+d}n{self.c:+d})"


Expr = Union[ProductSpec, ThetaSpec, SlaterSum, LinComb, Prod, QuadSum]


# -- builders --

def _apply_factors(R, s, factors: Sequence[FactorSpec], n: int, N: int):
    for f in factors:
        op = R.div_binomial if f.denom else R.mul_binomial
        for e in f.exponents(n, N):
            s = op(s, f.sign, e)
    return s


def _build_product(R, spec: ProductSpec, N: int):
    return _apply_factors(R, R.one(N), spec.factors, 0, N)


def build_product(spec: ProductSpec, N: int) -> Series:
    """Exact expansion of a product of q-Pochhammer factors to order N.

    >>> build_product(ProductSpec([poch(+1, 1)]), 7).tolist()
    [1, 1, 1, 2, 2, 3, 4, 5]
    """
    return _build_product(_Exact, spec, N)


def _build_theta(R, spec: ThetaSpec, N: int):
    return R.from_terms(N, spec.terms(N))


def build_theta(spec: ThetaSpec, N: int) -> Series:
    """Direct summation of a theta series."""
    return _build_theta(_Exact, spec, N)


def theta_product_spec(P: int, r: int, sign_mode: str = "plain") -> ProductSpec:
    """Product side of the triple product at q -> q^P, z -> +-q^(-r):

    prod_{n>=1} (1 - q^(Pn)) (1 +- q^(Pn-r)) (1 +- q^(Pn-P+r)).
    """
    if not 0 < r < P:
        raise ValueError(f"need 0 < r < P, got P={P}, r={r}")
    if sign_mode not in ("plain", "alternating"):
        raise ValueError(f"sign_mode must be 'plain' or 'alternating', got {sign_mode!r}")
    s = 1 if sign_mode == "plain" else -1
    return ProductSpec([poch(-1, P, P), poch(s, P - r, P), poch(s, r, P)])


def theta_product(P: int, r: int, sign_mode: str, N: int) -> Series:
    return build_product(theta_product_spec(P, r, sign_mode), N)


def _build_slater(R, prefactor: ProductSpec, terms: Sequence[GFTermSpec], N: int):
    total = R.zero(N)
    for t in terms:
        for n in t.indices(N):
            sign = -1 if (t.alternating and n % 2) else 1
            body = R.monomial(N, t.exponent(n), sign)
            body = _apply_factors(R, body, t.factors, n, N)
            total = R.add(total, body)
    return _apply_factors(R, total, prefactor.factors, 0, N)


def build_slater_sum(prefactor: ProductSpec, terms: Sequence[GFTermSpec], N: int) -> Series:
    """prefactor * sum over terms, each summand expanded at the full order N."""
    return _build_slater(_Exact, prefactor, terms, N)


def _expand(R, expr, N):
    if isinstance(expr, ProductSpec):
        return _build_product(R, expr, N)
    if isinstance(expr, (ThetaSpec, QuadSum)):
        return R.from_terms(N, expr.terms(N))
    if isinstance(expr, SlaterSum):
        return _build_slater(R, expr.prefactor, expr.terms, N)
    if isinstance(expr, LinComb):
        return R.lincomb(N, [(c, _expand(R, e, N)) for c, e in expr.parts])
    if isinstance(expr, Prod):
        acc = R.one(N)
        for e in expr.parts:
            acc = R.mul(acc, _expand(R, e, N))
        return acc
    if isinstance(expr, FactorSpec):
        return _build_product(R, ProductSpec([expr]), N)
    raise TypeError(f"cannot expand {type(expr).__name__}")


def expand(expr, N: int) -> Series:
    """Exact expansion of any builder expression to order N."""
    return _expand(_Exact, expr, N)


def expand_parity(expr, N: int) -> ParitySeries:
    """Expansion computed entirely over GF(2)."""
    return _expand(_Parity, expr, N)
