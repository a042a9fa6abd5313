"""Catalog of q-series identities and mod-2 proof steps, with a bounded checker.

Entry ids are stable strings used by the CLI and tests:

* ``jtp.P.r`` -- triple product at q -> q^P, z -> q^(-r) (plain signs)
* ``gauss``, ``cauchy.q2.q4``, ``cube``
* ``slater.eqNN`` -- Rogers-Ramanujan type sums of the Slater list
* ``step.*`` -- congruence chains from the parity proofs, checked mod 2

An entry may carry intermediate expressions (``via``); every consecutive pair
in ``lhs, *via, rhs`` must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import partitions
from .builders import (
    GFTermSpec,
    LinComb,
    Prod,
    ProductSpec,
    QuadSum,
    SlaterSum,
    ThetaSpec,
    expand,
    expand_parity,
    poch,
    theta_product_spec,
)
from .reports import Timer, VerificationReport, report
from .series import first_difference

__all__ = [
    "IdentityEntry",
    "JTP_PAIRS",
    "identity_catalog",
    "identity_ids",
    "get_identity",
    "verify_entry",
    "verify_identity",
    "expand_side",
]

JTP_PAIRS = ((3, 1), (4, 1), (5, 2), (6, 1), (6, 2), (7, 1), (7, 2), (7, 3), (8, 3), (12, 2))

n = (1, 0)  # affine "n" for factor bounds


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    lhs: object
    rhs: object
    mode: str = "exact"
    via: tuple = ()
    aliases: tuple = ()
    note: str = ""

    def __post_init__(self):
        if self.mode not in ("exact", "mod2"):
            raise ValueError(f"mode must be 'exact' or 'mod2', got {self.mode!r}")
        object.__setattr__(self, "via", tuple(self.via))

    @property
    def sides(self) -> tuple:
        return (self.lhs, *self.via, self.rhs)


def _P(*factors):
    return ProductSpec(factors)


def _sum(prefactor, *terms):
    return SlaterSum(ProductSpec(prefactor), terms)


def _plus(*exprs):
    return LinComb(tuple((1, e) for e in exprs))


QQ = poch(-1, 1)          # (q;q)_inf
Q2Q2 = poch(-1, 2, 2)     # (q^2;q^2)_inf


def _slater():
    inv = dict(denom=True)
    return [
        ("eq7", _sum([QQ], GFTermSpec(0, (1, 1, 0), [poch(-1, 2, 2, n, **inv)])), (4, 1, "alternating")),
        ("eq18", _sum([QQ], GFTermSpec(0, (1, 0, 0), [poch(-1, 1, 1, n, **inv)])), (5, 2, "alternating")),
        ("eq23", _sum([Q2Q2, poch(-1, 1, 2, **inv)],
                      GFTermSpec(0, (1, 0, 0), [poch(-1, 2, 2, n, **inv)], alternating=True)),
         (6, 2, "alternating")),
        ("eq27", _sum([Q2Q2], GFTermSpec(0, (2, 2, 0), [
            poch(1, 1, 2, n), poch(-1, 1, 2, (1, 1), **inv), poch(-1, 4, 4, n, **inv)])),
         (6, 1, "plain")),
        ("eq29", _sum([Q2Q2, poch(1, 1, 2, **inv)], GFTermSpec(0, (1, 0, 0), [
            poch(1, 1, 2, n), poch(-1, 1, 1, (2, 0), **inv)])),
         (6, 2, "plain")),
        ("eq31", _sum([Q2Q2], GFTermSpec(0, (2, 2, 0), [
            poch(-1, 2, 2, n, **inv), poch(1, 1, 1, (2, 1), **inv)])),
         (7, 1, "alternating")),
        ("eq32", _sum([Q2Q2], GFTermSpec(0, (2, 2, 0), [
            poch(-1, 2, 2, n, **inv), poch(1, 1, 1, (2, 0), **inv)])),
         (7, 2, "alternating")),
        ("eq33", _sum([Q2Q2], GFTermSpec(0, (2, 0, 0), [
            poch(-1, 2, 2, n, **inv), poch(1, 1, 1, (2, 0), **inv)])),
         (7, 3, "alternating")),
        # prefactor is (q^2;q^2)/(-q;q^2); the product starting at 1+q^3 is off by (1+q)
        ("eq36", _sum([Q2Q2, poch(1, 1, 2, **inv)], GFTermSpec(0, (1, 0, 0), [
            poch(1, 1, 2, n), poch(-1, 2, 2, n, **inv)])),
         (8, 3, "alternating")),
        ("eq50", _sum([QQ], GFTermSpec(0, (1, 2, 0), [
            poch(1, 1, 2, n), poch(-1, 1, 1, (2, 1), **inv)])),
         (12, 2, "alternating")),
    ]


def _steps():
    tri = ThetaSpec.triangular()
    gf = lambda pid: partitions.get(pid).gf  # noqa: E731
    return [
        IdentityEntry(
            "step.c1.chain",
            _P(poch(-1, 4, 4), poch(-1, 1, 1, denom=True)),
            tri,
            mode="mod2",
            via=[_P(QQ, QQ, QQ)],
            note="(q^4;q^4)/(q;q) = (q;q)^3 = sum q^(n(n+1)/2) mod 2",
        ),
        IdentityEntry(
            "step.c2.theta-split",
            gf("c2"),
            _plus(ThetaSpec(8, 3), tri),
            mode="mod2",
            via=[
                _plus(_sum([], GFTermSpec(0, (1, 0, 0), [
                    poch(-1, (2, 2), 2), poch(-1, (2, 1), 2, denom=True)])),
                    _P(Q2Q2, poch(1, 1))),
                _plus(_sum([Q2Q2, poch(1, 1, 2, denom=True)], GFTermSpec(0, (1, 0, 0), [
                    poch(1, 1, 2, n), poch(-1, 2, 2, n, denom=True)])),
                    ThetaSpec.cube()),
                _plus(theta_product_spec(8, 3, "alternating"), tri),
            ],
            note="c2 generating function = sum q^(4n^2+n) + sum q^(n(n+1)/2) mod 2",
        ),
        IdentityEntry(
            "step.c3.theta-split",
            gf("c3"),
            _plus(ThetaSpec(6, 2), tri),
            mode="mod2",
            via=[
                _sum([Q2Q2, poch(-1, 1, 2, denom=True)],
                     GFTermSpec(1, (1, 0, 0), [poch(-1, 2, 2, n, denom=True)])),
                _plus(theta_product_spec(6, 2, "alternating"), _P(Q2Q2, poch(-1, 1, 2, denom=True))),
            ],
            note="c3 generating function = sum q^(n(3n+1)) + sum q^(n(n+1)/2) mod 2",
        ),
        IdentityEntry(
            "step.c8.pentagonal-split",
            gf("c8"),
            Prod((_plus(QuadSum(6, 1), QuadSum(6, 7, 2)), _plus(QuadSum(10, 1), QuadSum(10, 11, 3)))),
            mode="mod2",
            via=[
                _sum([Q2Q2], GFTermSpec(0, (1, 0, 0), [poch(-1, 1, 1, n, denom=True)])),
                Prod((_P(QQ), theta_product_spec(5, 2, "plain"))),
                Prod((ThetaSpec(3, 1), ThetaSpec(5, 2))),
            ],
            note="c8 generating function = (sum q^(n(6n+1)) + q^((2n+1)(3n+2))) "
                 "* (sum q^(n(10n+1)) + q^((2n+1)(5n+3))) mod 2",
        ),
    ]


@lru_cache(maxsize=None)
def identity_catalog() -> tuple:
    out = []
    for P, r in JTP_PAIRS:
        out.append(IdentityEntry(f"jtp.{P}.{r}", ThetaSpec(P, r), theta_product_spec(P, r, "plain"),
                                 aliases=("jacobi",)))
    out.append(IdentityEntry(
        "gauss", ThetaSpec(2, 1, "alternating"), _P(QQ, poch(1, 1, denom=True)), aliases=("gauss",)))
    out.append(IdentityEntry(
        "cauchy.q2.q4",
        _sum([], GFTermSpec(0, (4, -2, 0), [poch(-1, 4, 4, n, denom=True), poch(-1, 2, 4, n, denom=True)])),
        _P(poch(-1, 2, 4, denom=True)),
        aliases=("andpage20", "cauchy"),
        note="z = q^2, q -> q^4; the two printed copies of this identity are identical",
    ))
    out.append(IdentityEntry("cube", ThetaSpec.cube(), _P(QQ, QQ, QQ), aliases=("cube",)))
    for label, lhs, (P, r, mode) in _slater():
        out.append(IdentityEntry(f"slater.{label}", lhs, theta_product_spec(P, r, mode), aliases=(label,)))
    out.extend(_steps())
    return tuple(out)


def identity_ids() -> list[str]:
    return [e.id for e in identity_catalog()]


def get_identity(iid: str) -> IdentityEntry:
    for e in identity_catalog():
        if e.id == iid:
            return e
    raise KeyError(f"unknown identity {iid!r}; known: {', '.join(identity_ids())}")


def expand_side(expr, N: int, mod2: bool = False):
    return expand_parity(expr, N) if mod2 else expand(expr, N)


def verify_entry(entry: IdentityEntry, N: int) -> VerificationReport:
    """Compare consecutive sides of ``entry`` up to order N; first_failure is an exponent."""
    mod2 = entry.mode == "mod2"
    with Timer() as t:
        bad: Optional[int] = None
        prev = expand_side(entry.lhs, N, mod2)
        for side in (*entry.via, entry.rhs):
            cur = expand_side(side, N, mod2)
            bad = first_difference(prev, cur)
            if bad is not None:
                break
            prev = cur
    return report(entry.id, N, bad, t)


def verify_identity(iid: str, N: int) -> VerificationReport:
    return verify_entry(get_identity(iid), N)
