"""Exhaustive small-size checks runnable without a test framework."""

from __future__ import annotations

from collections.abc import Callable, Iterator

from bsxkit import bill
from bsxkit.bits import codeword, decode_postorder, decode_preorder
from bsxkit.bsx import Bsx, all_of_size, join_text, split_text
from bsxkit.catalan import catalan, catalan_sum, lgx
from bsxkit.numcodec import decode, encode_text, num_join, num_split


def _all_upto(max_size: int) -> Iterator[str]:
    for n in range(max_size + 1):
        yield from all_of_size(n)


def check_enumeration(max_size: int) -> bool:
    """Brute-force bsxes of each size decode to exactly ``[S_n, S_{n+1})``."""
    for n in range(max_size + 1):
        ranks = sorted(decode(s) for s in all_of_size(n))
        if ranks != list(range(catalan_sum(n), catalan_sum(n + 1))):
            return False
    return True


def check_size_law(max_size: int) -> bool:
    return all(lgx(decode(s)) == (len(s) - 2) // 2 for s in _all_upto(max_size))


def check_round_trip(max_size: int) -> bool:
    return all(encode_text(decode(s)) == s for s in _all_upto(max_size))


def check_split_join(max_size: int) -> bool:
    words = list(_all_upto(max_size))
    for w in words:
        if w != "()" and join_text(*split_text(w)) != w:
            return False
    small = [w for w in words if len(w) <= max_size + 2]
    return all(split_text(join_text(x, y)) == (x, y) for x in small for y in small)


def check_numeric_bijection(limit: int) -> bool:
    return all(num_join(*num_split(x)) == x for x in range(1, limit + 1))


def check_decoders(max_size: int) -> bool:
    for s in _all_upto(max_size):
        x = decode(s)
        bits = codeword(x)
        if not (decode_preorder(bits) == decode_postorder(bits) == x):
            return False
    return True


def check_succ(max_size: int) -> bool:
    limit = catalan_sum(max_size + 1)
    x = "()"
    for i in range(limit):
        if x != encode_text(i):
            return False
        x = bill._succ_text(x)
    return True


def check_up(max_size: int) -> bool:
    for s in _all_upto(max_size):
        last = decode(s) + 1 == catalan_sum((len(s) - 2) // 2 + 1)
        if (bill.up(Bsx._trusted(s)) is not None) != last:
            return False
    return True


def check_catalan_constants(_: int) -> bool:
    return catalan(19) == 1_767_263_190 and catalan(20) == 6_564_120_420


CHECKS: list[tuple[str, Callable[[int], bool]]] = [
    ("catalan constants", check_catalan_constants),
    ("enumeration oracle", check_enumeration),
    ("size law", check_size_law),
    ("encode/decode round trip", check_round_trip),
    ("split/join round trip", check_split_join),
    ("numeric bijection", lambda n: check_numeric_bijection(catalan_sum(n + 1))),
    ("decoder agreement", check_decoders),
    ("structural succ", check_succ),
    ("up wrap-around", check_up),
]


def run(deep: bool = False, report: Callable[[str], None] = print) -> bool:
    max_size = 10 if deep else 8
    ok = True
    for name, check in CHECKS:
        passed = check(max_size)
        ok &= passed
        report(f"{'PASS' if passed else 'FAIL'}  {name} (sizes <= {max_size})")
    return ok
