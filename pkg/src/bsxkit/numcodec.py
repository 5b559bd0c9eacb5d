"""Numeric head/tail/join and the bijection between naturals and bsxes.

Within size ``n``, numbers are ordered by head size ``p`` first, then head
rank, then tail rank::

    j = S_n + sum_{k<p} C_{n-1-k} C_k + (h - S_p) C_q + (t - S_q),  q = n-1-p
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import NamedTuple

from bsxkit.bsx import Bsx
from bsxkit.catalan import catalan, catalan_sum, lgx
from bsxkit.errors import SizeTooLarge

# enumerate_size refuses classes larger than this
ENUMERATE_CAP = 10_000_000


class HeadTail(NamedTuple):
    head: int
    tail: int


def _conv(n: int, k: int) -> int:
    # number of size-n bsxes whose head has size k
    return catalan(n - 1 - k) * catalan(k)


def _offset(n: int, p: int) -> int:
    """``sum_{k<p} C_{n-1-k} C_k``, summed from whichever end is shorter."""
    if 2 * p <= n:
        return sum(_conv(n, k) for k in range(p))
    return catalan(n) - sum(_conv(n, k) for k in range(p, n))


def num_split(j: int) -> HeadTail:
    """Numeric head and tail (``nh``, ``nt``); both are 0 for ``j = 0``."""
    if j < 0:
        raise ValueError("j must be non-negative")
    if j == 0:
        return HeadTail(0, 0)
    n = lgx(j)
    x0 = j - catalan_sum(n)
    cn = catalan(n)
    # random ranks concentrate at small or large head sizes, so scan from the near end
    if 2 * x0 < cn:
        base = 0
        for p in range(n):
            block = _conv(n, p)
            if x0 < base + block:
                break
            base += block
    else:
        upper = cn
        for p in range(n - 1, -1, -1):
            base = upper - _conv(n, p)
            if base <= x0:
                break
            upper = base
    q = n - 1 - p
    hi, lo = divmod(x0 - base, catalan(q))
    return HeadTail(catalan_sum(p) + hi, catalan_sum(q) + lo)


def num_join(a: int, b: int) -> int:
    """Inverse of :func:`num_split`, mapping pairs onto the positive integers."""
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    p = lgx(a)
    q = lgx(b)
    n = p + q + 1
    return (
        catalan_sum(n)
        + _offset(n, p)
        + (a - catalan_sum(p)) * catalan(q)
        + (b - catalan_sum(q))
    )


def encode(x: int) -> Bsx:
    """The bsx numbered ``x``."""
    return Bsx._trusted(encode_text(x))


def encode_text(x: int) -> str:
    if x < 0:
        raise ValueError("x must be non-negative")
    # e(x) is '(' followed by the pre-order walk of the join tree:
    # '(' for a join node, ')' for a nil leaf.
    out = ["("]
    stack = [x]
    while stack:
        y = stack.pop()
        if y == 0:
            out.append(")")
        else:
            h, t = num_split(y)
            out.append("(")
            stack.append(t)
            stack.append(h)
    return "".join(out)


def decode(b: Bsx | str) -> int:
    """The number of a bsx; accepts a :class:`Bsx` or trusted bsx text."""
    text = b.text if isinstance(b, Bsx) else b
    # One list per open parenthesis; on ')' the finished list is folded
    # right-to-left with num_join and becomes an item of its parent.
    lists: list[list[int]] = []
    value = 0
    for ch in text:
        if ch == "(":
            lists.append([])
        else:
            value = 0
            for item in reversed(lists.pop()):
                value = num_join(item, value)
            if lists:
                lists[-1].append(value)
    return value


def enumerate_size(n: int, cap: int = ENUMERATE_CAP) -> Iterator[Bsx]:
    """All bsxes of size ``n`` in numeric order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    count = catalan(n)
    if count > cap:
        raise SizeTooLarge(f"size {n} has {count} members, cap is {cap}")
    start = catalan_sum(n)
    return (encode(start + k) for k in range(count))


def list_length(x: int) -> int:
    """Number of top-level items of ``encode(x)``."""
    m = 0
    while x:
        x = num_split(x).tail
        m += 1
    return m


def unpack(x: int) -> list[int]:
    """The items of ``encode(x)`` as numbers: ``[nh(x), nh(nt(x)), ...]``."""
    items = []
    while x:
        h, x = num_split(x)
        items.append(h)
    return items


def pack(xs: Iterable[int]) -> int:
    """Right fold of :func:`num_join` ending at 0; inverse of :func:`unpack`."""
    value = 0
    for item in reversed(list(xs)):
        value = num_join(item, value)
    return value

