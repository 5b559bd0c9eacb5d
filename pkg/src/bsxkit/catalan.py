"""Exact Catalan numbers, their partial sums, and the numeric size ``lgx``.

``S_n = C_0 + ... + C_{n-1}`` is the first number whose encoding has size
``n``, so ``lgx`` plays the role of a logarithm and ``S`` of an exponential.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from fractions import Fraction


class CatalanTable:
    """Memoized ``C_n`` and ``S_n``, grown on demand by amortized doubling."""

    def __init__(self, initial: int = 32):
        self._c = [1]
        self._s = [0, 1]  # one entry ahead of _c
        self._lock = threading.Lock()
        self._extend(initial)

    def __len__(self) -> int:
        return len(self._c)

    def _extend(self, n: int) -> None:
        # Grow so that C_0..C_n and S_0..S_{n+1} are cached.
        if n < len(self._c):
            return
        with self._lock:
            c, s = self._c, self._s
            target = max(n + 1, 2 * len(c))
            cn = c[-1]
            sn = s[-1]
            for k in range(len(c), target):
                cn = cn * (4 * k - 2) // (k + 1)
                sn += cn
                c.append(cn)
                s.append(sn)

    def catalan(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be non-negative")
        if n >= len(self._c):
            self._extend(n)
        return self._c[n]

    def catalan_sum(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be non-negative")
        if n >= len(self._s):
            self._extend(n)
        return self._s[n]

    def lgx(self, j: int) -> int:
        if j < 0:
            raise ValueError("lgx is defined on natural numbers only")
        s = self._s
        # Gallop until the table brackets j; lgx(j) is about log2(j)/2.
        while s[-1] <= j:
            self._extend(2 * len(self._c))
            s = self._s
        return bisect_right(s, j) - 1

    def coords(self, j: int) -> tuple[int, int]:
        n = self.lgx(j)
        return n, j - self._s[n]


_TABLE = CatalanTable()


def default_table() -> CatalanTable:
    return _TABLE


def catalan(n: int) -> int:
    """``C_n = binomial(2n, n) / (n + 1)``, exact."""
    return _TABLE.catalan(n)


def catalan_sum(n: int) -> int:
    """``S_n``, the sum of the first ``n`` Catalan numbers (``S_0 = 0``)."""
    return _TABLE.catalan_sum(n)


def catalan_pair(n: int) -> tuple[int, int]:
    """Return ``(C_n, S_n)`` in a single upward pass, without the shared table."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1, 0
    if n == 1:
        return 1, 1
    cn, sn = 1, 2  # C_1, S_2
    for k in range(2, n + 1):
        cn = cn * (4 * k - 2) // (k + 1)
        if k == n:
            return cn, sn
        sn += cn
    raise AssertionError("unreachable")


def lgx(j: int) -> int:
    """Smallest ``n`` with ``j < S_{n+1}``: the size of the bsx numbered ``j``."""
    return _TABLE.lgx(j)


def coords(j: int) -> tuple[int, int]:
    """Split ``j`` as ``S_n + r`` with ``0 <= r < C_n``; returns ``(n, r)``."""
    return _TABLE.coords(j)


def stirling_theta(n: int) -> float:
    """Correction exponent in ``C_n = n/(n+1) * e^theta / sqrt(pi) * n^-1.5 * 4^n``.

    Always lies in ``(-1/(6n), 0)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    # (n+1) C_n / 4^n is of order n^-1/2, so the float conversion is exact-rounded
    ratio = float(Fraction((n + 1) * catalan(n), 4**n))
    return math.log(ratio) + 0.5 * math.log(math.pi) + 0.5 * math.log(n)


def sum_ratio(n: int) -> float:
    """``3 S_n / (4 C_{n-1})``, which tends to 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(Fraction(3 * catalan_sum(n), 4 * catalan(n - 1)))
