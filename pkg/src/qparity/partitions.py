"""The partition functions c1..c12 (partitions with initial repetitions).

Each function is described twice, independently:

* by its generating function, a :class:`~qparity.builders.SlaterSum` whose
  summation index j is the size of the forced "staircase", and
* by a multiplicity rule ``rule(j, k) -> (lo, hi)`` giving the allowed
  multiplicities of part size k at index j (``hi=None`` means unbounded),
  which drives a backtracking enumerator.

The counting unit is the pair (j, partition): a partition that satisfies the
rule at two different j is counted twice, exactly as the generating function
does.  :func:`distinct_count` gives the count of distinct partitions for
comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .builders import GFTermSpec, ProductSpec, SlaterSum, expand, expand_parity, poch
from .families import Characterization, CongruenceClaim, QuadraticFamily
from .series import ParitySeries, Series

__all__ = [
    "ORACLE_BOUND",
    "OracleBoundError",
    "PartitionDef",
    "PartitionInstance",
    "definitions",
    "get",
    "ids",
    "gf_series",
    "gf_parity",
    "restriction_predicate",
    "bruteforce_list",
    "bruteforce_count",
    "distinct_count",
    "partitions_to_json",
]

ORACLE_BOUND = 60
INF = None
N_ = (1, 0)  # the affine form "n" for factor bounds


class OracleBoundError(ValueError):
    """Brute-force enumeration requested beyond the configured bound."""


@dataclass(frozen=True)
class PartitionInstance:
    j: int
    parts: tuple

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def to_dict(self):
        return {"j": self.j, "parts": list(self.parts)}


@dataclass(frozen=True)
class PartitionDef:
    id: str
    summary: str
    gf: SlaterSum
    rule: Callable[[int, int], tuple]
    j_min: int = 0
    j_skip: tuple = ()
    characterizations: tuple = ()
    congruences: tuple = ()
    notes: tuple = field(default=())

    def admissible(self, j: int) -> bool:
        return j >= self.j_min and j not in self.j_skip

    def forced_weight(self, j: int) -> int:
        """Total size of the parts every partition at index j must contain."""
        w = 0
        for k in range(1, 4 * j + 8):
            w += self.rule(j, k)[0] * k
        return w

    def indices(self, n: int) -> Iterator[int]:
        """Admissible j whose staircase fits inside n."""
        j = self.j_min
        while self.forced_weight(j) <= n:
            if self.admissible(j):
                yield j
            j += 1


# -- multiplicity rules, one per function --
# rule(j, k) -> (min multiplicity, max multiplicity or None for unbounded)

def _odd(k):
    return k % 2 == 1


def _rule_c1(j, k):
    if k <= 2 * j - 1:
        return (2, INF)
    if k == 2 * j:
        return (0, INF)
    return (0, 1)


def _rule_c2(j, k):
    if _odd(k):
        return (1, 1) if k <= 2 * j - 1 else (0, INF)
    return (0, 1) if k >= 2 * j + 2 else (0, 0)


def _rule_c3(j, k):
    if k == 1:
        return (j * j, j * j + 1)
    if _odd(k):
        return (0, 1)
    if k <= 2 * j or (k >= 4 * j + 4 and k % 4 == 0):
        return (0, 1)
    return (0, 0)


def _rule_c4(j, k):
    if not _odd(k):
        if k <= 2 * j:
            return (2, 2)
        return (0, 1) if k >= 4 * j + 2 else (0, 0)
    return (0, 1) if k < 2 * j else (0, 0)


def _rule_c5(j, k):
    if _odd(k):
        return (2, 3) if k <= 2 * j - 1 else (0, 0)
    return (0, 1) if k >= 4 * j + 2 else (0, 0)


def _rule_c6(j, k):
    if _odd(k):
        if k < 2 * j:
            return (0, 1)
        return (0, INF) if k == 2 * j + 1 else (0, 0)
    if k <= 2 * j:
        return (2, 2)
    return (0, 1) if k >= 4 * j + 2 else (0, 0)


def _rule_c7(j, k):
    if _odd(k):
        return (0, INF) if k == 2 * j + 1 else (0, 0)
    extra = 1 if k % 4 == 2 else 0
    if k <= 2 * j:
        return (2, 2 + extra)
    if extra:
        return (0, 1)
    return (0, 1) if k >= 4 * j + 4 else (0, 0)


def _rule_c8(j, k):
    base = 1 if _odd(k) and k <= 2 * j - 1 else 0
    extra = 1 if k <= j else 0
    if base or extra:
        return (base, base + extra)
    if not _odd(k) and k >= 2 * j + 2:
        return (0, 1)
    return (0, 0)


def _rule_c9(j, k):
    if j == 0:
        return (0, 0) if k == 1 else (0, 1)
    if k == 1:
        return (j * j, j * j)
    return (0, 1) if k >= j + 1 else (0, 0)


def _rule_c10(j, k):
    if k <= j:
        return (2, 3) if _odd(k) else (2, 2)
    if _odd(k):
        return (0, 1)
    return (0, 1) if k >= 2 * j + 2 else (0, 0)


def _rule_c11(j, k):
    if _odd(k):
        return (1, INF) if k <= 2 * j - 1 else (0, INF)
    return (0, 1) if k >= 2 * j + 2 else (0, 0)


def _rule_c12(j, k):
    extra = 1 if _odd(k) else 0
    if k < j:
        return (2, 2 + extra)
    if k == j:
        return (3, 3 + extra)
    if extra:
        return (0, 1)
    return (0, 1) if k >= 2 * j + 4 else (0, 0)


def _gf(*terms, prefactor=()):
    return SlaterSum(ProductSpec(prefactor), terms)


def _qf(*args, **kw):
    return QuadraticFamily(*args, **kw)


def _char(*fams, m=1, r=0):
    return Characterization(fams, m, r)


def _congs(m, *rs):
    return tuple(CongruenceClaim(m, r) for r in rs)


@lru_cache(maxsize=None)
def definitions() -> tuple:
    """The registry of c1..c12 with their claimed parity results."""
    return (
        PartitionDef(
            "c1",
            "parts 1..2j-1 repeated, part 2j free, larger parts distinct (j=0: distinct parts)",
            _gf(GFTermSpec(0, (4, -2, 0), [poch(-1, 1, 1, (2, 0), denom=True), poch(1, (2, 1), 1)])),
            _rule_c1,
            characterizations=(_char(_qf(1, 1, 0, 2, "Z>=0")),),
        ),
        PartitionDef(
            "c2",
            "odd parts < 2j exactly once, larger odd parts free, even parts distinct and > 2j",
            _gf(GFTermSpec(1, (1, 0, 0), [poch(-1, (2, 1), 2, denom=True), poch(1, (2, 2), 2)])),
            _rule_c2,
            j_min=1,
            congruences=_congs(5, 2),
        ),
        PartitionDef(
            "c3",
            "1 appears j^2 or j^2+1 times, odd parts > 1 distinct, even parts distinct, "
            "those > 2j are multiples of 4 that are >= 4j+4",
            _gf(GFTermSpec(1, (1, 0, 0), [
                poch(1, 1, 1, 1), poch(1, 3, 2), poch(1, 2, 2, N_), poch(1, (4, 4), 4)])),
            _rule_c3,
            j_min=1,
            characterizations=(
                _char(_qf(1, 1, -2, 10, "Z>=1", side=(5, (1, 3))), m=5, r=1),
                _char(_qf(75, 125, 50, 5, "Z"), m=5, r=2),
                _char(_qf(25, 25, 0, 10, "Z>=0"), m=5, r=3),
                _char(_qf(3, 1, -4, 5, "Z", side=(5, (1, 2))), m=5, r=4),
            ),
            congruences=_congs(11, 5, 7, 9),
        ),
        PartitionDef(
            "c4",
            "even parts 2..2j exactly twice, odd parts distinct and < 2j, "
            "other even parts distinct and >= 4j+2",
            _gf(GFTermSpec(0, (2, 2, 0), [poch(1, 1, 2, N_), poch(1, (4, 2), 2)])),
            _rule_c4,
            characterizations=(_char(_qf(7, 3, 0, 2)),),
        ),
        PartitionDef(
            "c5",
            "odd parts 1..2j-1 twice or thrice, even parts distinct and >= 4j+2",
            _gf(GFTermSpec(0, (2, 0, 0), [poch(1, 1, 2, N_), poch(1, (4, 2), 2)])),
            _rule_c5,
            characterizations=(_char(_qf(7, 1, 0, 2)),),
        ),
        PartitionDef(
            "c6",
            "as c4, plus the part 2j+1 with any multiplicity",
            _gf(GFTermSpec(0, (2, 2, 0), [
                poch(1, 1, 2, N_), poch(-1, (2, 1), 1, 1, denom=True), poch(1, (4, 2), 2)])),
            _rule_c6,
            characterizations=(_char(_qf(7, 5, 0, 2)),),
        ),
        PartitionDef(
            "c7",
            "even parts 2..2j twice (thrice allowed if = 2 mod 4), other parts = 2 mod 4 distinct, "
            "part 2j+1 free, multiples of 4 above 2j distinct and >= 4j+4",
            _gf(GFTermSpec(0, (2, 2, 0), [
                poch(1, 2, 4), poch(-1, (2, 1), 1, 1, denom=True), poch(1, (4, 4), 4)])),
            _rule_c7,
            characterizations=(_char(_qf(3, 2)),),
            notes=("the j=0 term admits distinct multiples of 4, as the summed generating "
                   "function does; the word description of case (a) omits them",),
        ),
        PartitionDef(
            "c8",
            "odd parts 1..2j-1 once, parts <= j may take one extra copy, "
            "even parts > j distinct and >= 2j+2",
            _gf(GFTermSpec(0, (1, 0, 0), [poch(1, 1, 1, N_), poch(1, (2, 2), 2)])),
            _rule_c8,
            congruences=_congs(49, 6, 20, 27, 34, 41, 48),
        ),
        PartitionDef(
            "c9",
            "j=0: distinct parts > 1; j>=2: 1 exactly j^2 times, other parts distinct and >= j+1",
            _gf(GFTermSpec(0, (0, 0, 0), [poch(1, 2, 1)], n_stop=0),
                GFTermSpec(2, (1, 0, 0), [poch(1, (1, 1), 1)])),
            _rule_c9,
            j_skip=(1,),
            characterizations=(_char(_qf(5, 1, 0, 2)),),
            notes=("1 appears exactly j^2 times (reading 'at least' would over-count; "
                   "(6,1^5) is not a c9 partition of 11)",),
        ),
        PartitionDef(
            "c10",
            "parts 1..j twice (odd ones may take a third copy), larger odd parts distinct, "
            "even parts > j distinct and >= 2j+2",
            _gf(GFTermSpec(0, (1, 1, 0), [poch(1, 1, 2), poch(1, (2, 2), 2)])),
            _rule_c10,
            characterizations=(_char(_qf(2, 1)),),
        ),
        PartitionDef(
            "c11",
            "odd parts 1..2j-1 at least once, any other odd parts, even parts distinct and >= 2j+2",
            _gf(GFTermSpec(1, (1, 0, 0), [poch(-1, 1, 2, denom=True), poch(1, (2, 2), 2)])),
            _rule_c11,
            j_min=1,
            congruences=_congs(11, 5, 7, 9),
            notes=("odd parts of every size are unrestricted, following the generating function",),
        ),
        PartitionDef(
            "c12",
            "parts 1..j-1 twice and j thrice (odd ones may take one more copy), larger odd parts "
            "distinct, even parts > j distinct and >= 2j+4",
            _gf(GFTermSpec(0, (1, 2, 0), [poch(1, 1, 2), poch(1, (2, 4), 2)])),
            _rule_c12,
            characterizations=(_char(_qf(6, 4)),),
            congruences=_congs(2, 1),
        ),
    )


def ids() -> list[str]:
    return [d.id for d in definitions()]


def get(pid: str) -> PartitionDef:
    for d in definitions():
        if d.id == pid:
            return d
    raise KeyError(f"unknown partition function {pid!r}; known: {', '.join(ids())}")


def gf_series(pid: str, N: int) -> Series:
    """Exact generating function of ``pid`` to order N."""
    return expand(get(pid).gf, N)


def gf_parity(pid: str, N: int) -> ParitySeries:
    """Generating function of ``pid`` computed directly mod 2."""
    return expand_parity(get(pid).gf, N)


def restriction_predicate(pid: str, j: int, parts) -> bool:
    """Whether ``parts`` is a valid partition for ``pid`` at index j."""
    d = get(pid)
    if not d.admissible(j):
        return False
    mult = {}
    for p in parts:
        if p < 1:
            return False
        mult[p] = mult.get(p, 0) + 1
    top = max([*mult, 4 * j + 8])
    for k in range(1, top + 1):
        lo, hi = d.rule(j, k)
        m = mult.get(k, 0)
        if m < lo or (hi is not None and m > hi):
            return False
    return True


def _enumerate(d: PartitionDef, j: int, n: int) -> Iterator[tuple]:
    rules = [None] + [d.rule(j, k) for k in range(1, n + 1)]
    # forced[k]: weight that parts of size <= k must still contribute
    forced = [0] * (n + 1)
    for k in range(1, n + 1):
        forced[k] = forced[k - 1] + rules[k][0] * k

    def rec(k, rem, acc):
        if k == 0:
            if rem == 0:
                yield acc
            return
        lo, hi = rules[k]
        top = rem // k if hi is None else min(hi, rem // k)
        for m in range(top, lo - 1, -1):
            left = rem - m * k
            if left >= forced[k - 1]:
                yield from rec(k - 1, left, acc + (k,) * m)

    yield from rec(n, n, ())


def _check_bound(n, bound):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > bound:
        raise OracleBoundError(f"n={n} exceeds the brute-force bound {bound}")


def bruteforce_list(pid: str, n: int, bound: int = ORACLE_BOUND) -> list[PartitionInstance]:
    """All (j, partition) pairs of weight n; j ascending, parts lexicographically descending."""
    _check_bound(n, bound)
    d = get(pid)
    out = []
    for j in d.indices(n):
        found = sorted(_enumerate(d, j, n), reverse=True)
        out.extend(PartitionInstance(j, p) for p in found)
    return out


def bruteforce_count(pid: str, n: int, bound: int = ORACLE_BOUND) -> int:
    _check_bound(n, bound)
    d = get(pid)
    return sum(1 for j in d.indices(n) for _ in _enumerate(d, j, n))


def distinct_count(pid: str, n: int, bound: int = ORACLE_BOUND) -> int:
    """Number of distinct partitions of n valid at some j (no multiplicity by j)."""
    return len({p.parts for p in bruteforce_list(pid, n, bound)})


def partitions_to_json(pid: str, n: int, pairs: list[PartitionInstance]) -> str:
    return json.dumps({"id": pid, "n": n, "pairs": [p.to_dict() for p in pairs]})
