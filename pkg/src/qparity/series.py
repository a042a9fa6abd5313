"""Truncated formal power series in q with exact integer coefficients.

Two value types live here:

* :class:`Series` -- coefficients of q^0 .. q^N as arbitrary-precision
  Python ints (stored in a read-only numpy object array so the O(N)
  binomial kernels run as vector operations).
* :class:`ParitySeries` -- the same series reduced mod 2, bit-packed into a
  single Python int (bit i is the coefficient of q^i).

Every series carries an inclusive truncation order N.  Mixing orders is an
error; nothing is ever silently re-truncated.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "OrderMismatch",
    "Series",
    "ParitySeries",
    "make",
    "zero",
    "one",
    "add",
    "sub",
    "neg",
    "mul",
    "shift",
    "scale",
    "mul_binomial",
    "div_binomial",
    "coefficient",
    "equal",
    "first_difference",
    "to_parity",
    "parity_make",
    "parity_add",
    "parity_mul",
    "parity_shift",
    "parity_mul_binomial",
    "parity_div_binomial",
    "sift",
]


class OrderMismatch(ValueError):
    """Raised when two series of different truncation order are combined."""


def _check_order(order):
    if int(order) != order or order < 0:
        raise ValueError(f"truncation order must be a non-negative integer, got {order!r}")
    return int(order)


def _check_same(a, b):
    if a.order != b.order:
        raise OrderMismatch(f"order mismatch: {a.order} vs {b.order}")


def _check_binomial(sign, e):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if e < 1:
        raise ValueError(f"binomial exponent must be >= 1, got {e}")


def _frozen(arr):
    arr.flags.writeable = False
    return arr


class Series:
    """Exact power series truncated at q^order (inclusive)."""

    __slots__ = ("order", "_c")

    def __init__(self, order: int, coeffs: Sequence[int] | np.ndarray):
        order = _check_order(order)
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients for order {order}, got {len(coeffs)}")
        arr = np.empty(order + 1, dtype=object)
        arr[:] = [int(c) for c in coeffs]
        self.order = order
        self._c = _frozen(arr)

    @classmethod
    def _wrap(cls, order, arr):
        # trusted constructor for kernel outputs (arr already object dtype, length order+1)
        s = cls.__new__(cls)
        s.order = order
        s._c = _frozen(arr)
        return s

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only object array of the N+1 coefficients."""
        return self._c

    def tolist(self) -> list[int]:
        return self._c.tolist()

    def __len__(self):
        return self.order + 1

    def __getitem__(self, n):
        return coefficient(self, n)

    def __iter__(self):
        return iter(self._c.tolist())

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        return hash((self.order, tuple(self._c.tolist())))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self._c) if c]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self._c):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*q^{i}")
            if len(terms) == 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"Series({body}; O(q^{self.order + 1}))"


def make(order: int, terms: Iterable[tuple[int, int]] = ()) -> Series:
    """Build a series from ``(exponent, coefficient)`` pairs.

    >>> make(3, [(1, 1), (3, -2)]).tolist()
    [0, 1, 0, -2]
    """
    order = _check_order(order)
    arr = np.zeros(order + 1, dtype=object)
    arr[:] = 0
    seen = set()
    for e, c in terms:
        if e < 0 or e > order:
            raise ValueError(f"exponent {e} outside 0..{order}")
        if e in seen:
            raise ValueError(f"exponent {e} given twice")
        seen.add(e)
        arr[e] = int(c)
    return Series._wrap(order, arr)


def zero(order: int) -> Series:
    return make(order)


def one(order: int) -> Series:
    return make(order, [(0, 1)])


def add(a: Series, b: Series) -> Series:
    _check_same(a, b)
    return Series._wrap(a.order, a._c + b._c)


def sub(a: Series, b: Series) -> Series:
    _check_same(a, b)
    return Series._wrap(a.order, a._c - b._c)


def neg(a: Series) -> Series:
    return Series._wrap(a.order, -a._c)


def scale(a: Series, k: int) -> Series:
    return Series._wrap(a.order, a._c * int(k))


def shift(a: Series, k: int) -> Series:
    """Multiply by the monomial q^k (k >= 0), truncating at the same order."""
    if k < 0:
        raise ValueError("negative shifts would need Laurent series")
    arr = np.zeros(a.order + 1, dtype=object)
    arr[:] = 0
    if k <= a.order:
        arr[k:] = a._c[: a.order + 1 - k]
    return Series._wrap(a.order, arr)


# Cauchy product via Kronecker substitution: pack each coefficient vector into
# one big integer with fixed-width slots, let CPython's Karatsuba multiply them,
# and read the slots back.  Signed digits are handled by biasing each slot.

def _pack(values, width):
    pos = b"".join(max(v, 0).to_bytes(width, "little") for v in values)
    neg_ = b"".join(max(-v, 0).to_bytes(width, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg_, "little")


def mul(a: Series, b: Series) -> Series:
    """Truncated Cauchy product, exact."""
    _check_same(a, b)
    n = a.order + 1
    av, bv = a._c.tolist(), b._c.tolist()
    ma = max(abs(v) for v in av)
    mb = max(abs(v) for v in bv)
    if ma == 0 or mb == 0:
        return zero(a.order)
    bound = n * ma * mb
    width = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * width - 1)
    bias = int.from_bytes(half.to_bytes(width, "little") * n, "little")
    prod = _pack(av, width) * _pack(bv, width)
    low = (prod + bias) & ((1 << (8 * width * n)) - 1)
    raw = low.to_bytes(width * n, "little")
    arr = np.empty(n, dtype=object)
    arr[:] = [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(n)
    ]
    return Series._wrap(a.order, arr)


def mul_binomial(s: Series, sign: int, e: int) -> Series:
    """Return ``s * (1 + sign*q^e)`` in one O(N) pass."""
    _check_binomial(sign, e)
    out = s._c.copy()
    if e <= s.order:
        if sign > 0:
            out[e:] += s._c[: s.order + 1 - e]
        else:
            out[e:] -= s._c[: s.order + 1 - e]
    return Series._wrap(s.order, out)


def div_binomial(s: Series, sign: int, e: int) -> Series:
    """Return ``s / (1 + sign*q^e)``.

    Solves t[i] = s[i] - sign*t[i-e].  The recurrence only couples indices in
    the same residue class mod e, so the vector is folded into rows of length
    e and accumulated down the columns.
    """
    _check_binomial(sign, e)
    n = s.order + 1
    if e >= n:
        return Series._wrap(s.order, s._c.copy())
    rows = -(-n // e)
    grid = np.zeros(rows * e, dtype=object)
    grid[:] = 0
    grid[:n] = s._c
    grid = grid.reshape(rows, e)
    if sign < 0:
        out = np.cumsum(grid, axis=0)
    else:
        alt = np.empty((rows, 1), dtype=object)
        alt[:, 0] = [1 if k % 2 == 0 else -1 for k in range(rows)]
        out = np.cumsum(grid * alt, axis=0) * alt
    return Series._wrap(s.order, out.reshape(-1)[:n].astype(object))


def coefficient(s: Series | ParitySeries, n: int) -> int:
    if n < 0 or n > s.order:
        raise IndexError(f"coefficient {n} outside 0..{s.order}")
    if isinstance(s, ParitySeries):
        return (s.bits >> n) & 1
    return s._c[n]


def equal(a: Series, b: Series) -> bool:
    _check_same(a, b)
    return first_difference(a, b) is None


def first_difference(a, b) -> Optional[int]:
    """Smallest exponent where ``a`` and ``b`` differ, or None."""
    _check_same(a, b)
    if isinstance(a, ParitySeries):
        x = a.bits ^ b.bits
        return (x & -x).bit_length() - 1 if x else None
    diff = np.nonzero(a._c != b._c)[0]
    return int(diff[0]) if len(diff) else None


class ParitySeries:
    """A series reduced mod 2; ``bits`` is an int whose bit i is the coefficient of q^i."""

    __slots__ = ("order", "bits")

    def __init__(self, order: int, bits: int = 0):
        order = _check_order(order)
        if bits < 0 or bits.bit_length() > order + 1:
            raise ValueError(f"bits do not fit order {order}")
        self.order = order
        self.bits = bits

    def __getitem__(self, n):
        return coefficient(self, n)

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, ParitySeries):
            return NotImplemented
        return self.order == other.order and self.bits == other.bits

    def __hash__(self):
        return hash((self.order, self.bits))

    def __add__(self, other):
        return parity_add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        return parity_mul(self, other)

    def support(self) -> list[int]:
        """Exponents with odd coefficient, ascending."""
        s = bin(self.bits)[:1:-1]
        return [i for i, ch in enumerate(s) if ch == "1"]

    def tolist(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.order + 1)]

    def __repr__(self):
        sup = self.support()
        head = ", ".join(map(str, sup[:10])) + (", ..." if len(sup) > 10 else "")
        return f"ParitySeries(order={self.order}, support=[{head}])"


def _mask(order):
    return (1 << (order + 1)) - 1


def to_parity(s: Series) -> ParitySeries:
    digits = "".join("1" if c & 1 else "0" for c in reversed(s._c.tolist()))
    return ParitySeries(s.order, int(digits, 2))


def parity_make(order: int, exponents: Iterable[int]) -> ParitySeries:
    """Parity series with bit e toggled once for every e in ``exponents``."""
    bits = 0
    for e in exponents:
        if e < 0 or e > order:
            raise ValueError(f"exponent {e} outside 0..{order}")
        bits ^= 1 << e
    return ParitySeries(order, bits)


def parity_add(a: ParitySeries, b: ParitySeries) -> ParitySeries:
    _check_same(a, b)
    return ParitySeries(a.order, a.bits ^ b.bits)


def parity_shift(a: ParitySeries, k: int) -> ParitySeries:
    if k < 0:
        raise ValueError("negative shifts would need Laurent series")
    return ParitySeries(a.order, (a.bits << k) & _mask(a.order))


def parity_mul(a: ParitySeries, b: ParitySeries) -> ParitySeries:
    """Carry-less product, iterating over the set bits of the sparser operand."""
    _check_same(a, b)
    x, y = a.bits, b.bits
    if bin(x).count("1") > bin(y).count("1"):
        x, y = y, x
    mask = _mask(a.order)
    acc = 0
    for i, ch in enumerate(bin(x)[:1:-1]):
        if ch == "1":
            if i > a.order:
                break
            acc ^= y << i
    return ParitySeries(a.order, acc & mask)


def parity_mul_binomial(s: ParitySeries, sign: int, e: int) -> ParitySeries:
    _check_binomial(sign, e)
    return ParitySeries(s.order, (s.bits ^ (s.bits << e)) & _mask(s.order))


def parity_div_binomial(s: ParitySeries, sign: int, e: int) -> ParitySeries:
    # over GF(2), 1/(1+x) = (1+x)(1+x^2)(1+x^4)...
    _check_binomial(sign, e)
    mask = _mask(s.order)
    t = s.bits
    step = e
    while step <= s.order:
        t = (t ^ (t << step)) & mask
        step <<= 1
    return ParitySeries(s.order, t)


def sift(p: ParitySeries, m: int, r: int) -> ParitySeries:
    """Coefficients along the progression m*k + r, re-indexed by k."""
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need m >= 1 and 0 <= r < m, got m={m}, r={r}")
    if r > p.order:
        raise ValueError(f"residue {r} beyond order {p.order}")
    top = (p.order - r) // m
    s = bin(p.bits)[:1:-1]
    bits = 0
    for k in range(top + 1):
        i = m * k + r
        if i < len(s) and s[i] == "1":
            bits |= 1 << k
    return ParitySeries(top, bits)
