"""Checking parity characterizations and mod-2 congruences, and hunting for new ones.

All checks are bounded: a passing report means "verified up to order N".
When a check fails, ``first_failure`` is the smallest argument n of c(n)
where the claim breaks, so it can be re-checked directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import partitions
from .families import Characterization, CongruenceClaim, QuadraticFamily, family_members
from .reports import Timer, VerificationReport, report
from .series import ParitySeries, sift

__all__ = [
    "VerificationReport",
    "Theorem",
    "parity_matches_families",
    "verify_congruence",
    "verify_claim",
    "scan_zero_progressions",
    "theorem_registry",
    "theorem_ids",
    "verify_theorem",
    "MIN_SUPPORT",
]

MIN_SUPPORT = 20


def _family_bits(fams: Sequence[QuadraticFamily], N: int) -> int:
    bits = 0
    for f in fams:
        for n in family_members(f, N):
            bits |= 1 << n
    return bits


def _first_mismatch(p: ParitySeries, fams, m=1, r=0) -> Optional[int]:
    """First n (in c's own indexing) where p disagrees with the family union on m*k + r."""
    sub = p if (m, r) == (1, 0) else sift(p, m, r)
    x = sub.bits ^ _family_bits(fams, sub.order)
    if not x:
        return None
    k = (x & -x).bit_length() - 1
    return m * k + r


def parity_matches_families(p: ParitySeries, fams: Sequence[QuadraticFamily],
                            cid: str = "support") -> VerificationReport:
    """Pass iff the odd coefficients of p up to its order are exactly the family union."""
    with Timer() as t:
        bad = _first_mismatch(p, fams)
    return report(cid, p.order, bad, t)


def _first_violation(p: ParitySeries, c: CongruenceClaim) -> Optional[int]:
    if c.r > p.order:
        return None
    x = sift(p, c.m, c.r).bits
    if not x:
        return None
    return c.m * ((x & -x).bit_length() - 1) + c.r


def verify_congruence(p: ParitySeries, c: CongruenceClaim, cid: Optional[str] = None) -> VerificationReport:
    """Pass iff every coefficient at m*k + r <= N is even."""
    with Timer() as t:
        bad = _first_violation(p, c)
    return report(cid or f"cong.{c.m}.{c.r}", p.order, bad, t)


def scan_zero_progressions(p: ParitySeries, m: int, min_support: int = MIN_SUPPORT) -> list[int]:
    """Residues r mod m whose progression holds >= min_support indices, all with even coefficient."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if min_support < 1:
        raise ValueError(f"min_support must be >= 1, got {min_support}")
    N = p.order
    hit = [False] * m
    for n in p.support():
        hit[n % m] = True
    out = []
    for r in range(min(m, N + 1)):
        if not hit[r] and (N - r) // m + 1 >= min_support:
            out.append(r)
    return out


@lru_cache(maxsize=64)
def _parity(pid: str, N: int) -> ParitySeries:
    return partitions.gf_parity(pid, N)


def verify_claim(pid: str, claim: CongruenceClaim, N: int) -> VerificationReport:
    """Check an arbitrary congruence claim against partition function ``pid``."""
    return verify_congruence(_parity(pid, N), claim, f"{pid}:{claim.m}n+{claim.r}")


@dataclass(frozen=True)
class Theorem:
    id: str
    pid: str
    characterizations: tuple = ()
    congruences: tuple = ()
    statement: str = ""


def _char_text(pid, ch: Characterization):
    arg = "n" if (ch.m, ch.r) == (1, 0) else f"{ch.m}n+{ch.r}"
    fams = " or ".join(map(str, ch.families))
    return f"{pid}({arg}) odd iff {fams}"


@lru_cache(maxsize=None)
def theorem_registry() -> tuple:
    """Every parity theorem and congruence claimed for c1..c12."""
    d = {x.id: x for x in partitions.definitions()}

    def char_thm(tid, pid, chars):
        text = "; ".join(_char_text(pid, ch) for ch in chars)
        return Theorem(tid, pid, characterizations=tuple(chars), statement=text)

    def cong_thm(tid, pid, congs):
        text = "; ".join(f"{pid}({c.m}n+{c.r}) even" for c in congs)
        return Theorem(tid, pid, congruences=tuple(congs), statement=text)

    return (
        char_thm("T-c1", "c1", d["c1"].characterizations),
        cong_thm("T-c2", "c2", d["c2"].congruences),
        char_thm("T-c3-mod5", "c3", d["c3"].characterizations),
        cong_thm("T-c3-mod11", "c3", d["c3"].congruences),
        char_thm("T-c4", "c4", d["c4"].characterizations),
        char_thm("T-c5", "c5", d["c5"].characterizations),
        char_thm("T-c6", "c6", d["c6"].characterizations),
        char_thm("T-c7", "c7", d["c7"].characterizations),
        cong_thm("T-c8", "c8", d["c8"].congruences),
        char_thm("T-c9", "c9", d["c9"].characterizations),
        char_thm("T-c10", "c10", d["c10"].characterizations),
        cong_thm("T-c11-mod11", "c11", d["c11"].congruences),
        char_thm("T-c12", "c12", d["c12"].characterizations),
        cong_thm("C-c12-odd", "c12", d["c12"].congruences),
    )


def theorem_ids() -> list[str]:
    return [t.id for t in theorem_registry()]


def _theorem(tid):
    for t in theorem_registry():
        if t.id == tid:
            return t
    raise KeyError(f"unknown theorem {tid!r}; known: {', '.join(theorem_ids())}")


def verify_theorem(tid: str, N: int) -> VerificationReport:
    """Run every constituent check of theorem ``tid`` up to order N."""
    thm = _theorem(tid)
    with Timer() as t:
        p = _parity(thm.pid, N)
        fails = [_first_mismatch(p, ch.families, ch.m, ch.r) for ch in thm.characterizations]
        fails += [_first_violation(p, c) for c in thm.congruences]
        fails = [f for f in fails if f is not None]
    return report(tid, N, min(fails) if fails else None, t)
