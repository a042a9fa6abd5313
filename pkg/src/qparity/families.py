"""Quadratic support sets and congruence claims.

A :class:`QuadraticFamily` is the set of n with delta*n = alpha*j^2 + beta*j + gamma
for some admissible integer j.  Keeping delta explicit lets statements such
as n = (7j^2 + 3j)/2 be written down as printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = [
    "QuadraticFamily",
    "CongruenceClaim",
    "Characterization",
    "family_members",
    "quad_residues_mod",
]

DOMAINS = ("Z", "Z>=0", "Z>=1")


@dataclass(frozen=True)
class QuadraticFamily:
    alpha: int
    beta: int
    gamma: int = 0
    delta: int = 1
    domain: str = "Z"
    side: Optional[tuple] = None  # (t, residues): keep j only if j % t in residues

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.delta <= 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}")
        if self.side is not None:
            t, res = self.side
            object.__setattr__(self, "side", (int(t), frozenset(int(r) % t for r in res)))

    def value(self, j: int) -> int:
        return self.alpha * j * j + self.beta * j + self.gamma

    def admits(self, j: int) -> bool:
        if self.domain == "Z>=0" and j < 0 or self.domain == "Z>=1" and j < 1:
            return False
        return self.side is None or j % self.side[0] in self.side[1]

    def member(self, j: int) -> Optional[int]:
        """The n produced by j, or None if j is inadmissible or the division is inexact."""
        if not self.admits(j):
            return None
        v = self.value(j)
        if v < 0 or v % self.delta:
            return None
        return v // self.delta

    def __str__(self):
        a, b, c = self.alpha, self.beta, self.gamma
        num = f"{a}j^2{b:+d}j" + (f"{c:+d}" if c else "")
        s = num if self.delta == 1 else f"({num})/{self.delta}"
        cond = {"Z": "j in Z", "Z>=0": "j >= 0", "Z>=1": "j >= 1"}[self.domain]
        if self.side:
            t, res = self.side
            cond += f", j = {','.join(map(str, sorted(res)))} (mod {t})"
        return f"n = {s}, {cond}"


@dataclass(frozen=True)
class CongruenceClaim:
    """c(m*n + r) is even for every n >= 0."""

    m: int
    r: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        if not 0 <= self.r < self.m:
            raise ValueError(f"residue must satisfy 0 <= r < m, got r={self.r}, m={self.m}")

    def __str__(self):
        return f"c({self.m}n+{self.r}) = 0 (mod 2)"


@dataclass(frozen=True)
class Characterization:
    """Odd values of c(m*n + r), as n ranges, are exactly the union of ``families``."""

    families: tuple
    m: int = 1
    r: int = 0

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))


def family_members(f: QuadraticFamily, N: int) -> list[int]:
    """Sorted members of ``f`` lying in [0, N].

    j is scanned outward from 0 in both directions until the quadratic is
    past its vertex and above delta*N.
    """
    top = f.delta * N
    out = set()
    lo = {"Z": 0, "Z>=0": 0, "Z>=1": 1}[f.domain]
    j = lo
    while True:
        v = f.value(j)
        if v > top and f.alpha * (2 * j + 1) + f.beta > 0:
            break
        n = f.member(j)
        if n is not None and n <= N:
            out.add(n)
        j += 1
    if f.domain == "Z":
        j = -1
        while True:
            v = f.value(j)
            if v > top and f.alpha * (1 - 2 * j) - f.beta > 0:
                break
            n = f.member(j)
            if n is not None and n <= N:
                out.add(n)
            j -= 1
    return sorted(out)


def quad_residues_mod(alpha: int, beta: int, m: int, domain: str = "Z", delta: int = 1) -> list[int]:
    """Residues mod m taken by (alpha*j^2 + beta*j)/delta.

    j runs over one full period, delta*m consecutive integers; the sign
    restriction in ``domain`` does not change the set because every residue
    class of j has non-negative representatives.

    >>> quad_residues_mod(3, 1, 5)
    [0, 2, 4]
    >>> quad_residues_mod(1, 1, 5, delta=2)
    [0, 1, 3]
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if domain not in DOMAINS:
        raise ValueError(f"unknown domain {domain!r}")
    start = 1 if domain == "Z>=1" else 0
    out = set()
    for j in range(start, start + delta * m):
        v = alpha * j * j + beta * j
        if v % delta == 0:
            out.add((v // delta) % m)
    return sorted(out)
