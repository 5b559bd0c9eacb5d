"""Natural numbers as balanced parentheses, and what follows from it.

A bijection between the naturals and nested-parenthesis strings (bsxes) ranked
by Catalan numbers, the prefix-free bit code it induces, the matching family of
distributions on the naturals, and BILL, a Lisp written only in parentheses.
"""

from bsxkit.bsx import NIL, T, Bsx, head, join, parse, size, split, tail
from bsxkit.catalan import catalan, catalan_sum, lgx
from bsxkit.errors import BsxError
from bsxkit.numcodec import decode, encode, num_join, num_split

__all__ = [
    "NIL",
    "T",
    "Bsx",
    "BsxError",
    "catalan",
    "catalan_sum",
    "decode",
    "encode",
    "head",
    "join",
    "lgx",
    "num_join",
    "num_split",
    "parse",
    "size",
    "split",
    "tail",
]
