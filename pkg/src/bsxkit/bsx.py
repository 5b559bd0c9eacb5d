"""Binary symbolic expressions: balanced parenthesis strings read as nested lists.

A bsx is stored as its text.  ``'('`` and ``')'`` correspond to bits 0 and 1.
The helpers ``split_text``/``join_text`` work on raw strings and assume a valid
input; :class:`Bsx` wraps them for callers who want a validated value.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from bsxkit.errors import MalformedBsx

NIL_TEXT = "()"
T_TEXT = "(())"

_WHITESPACE = " \t\r\n\f\v"


def validate(text: str) -> None:
    """Raise :class:`MalformedBsx` unless ``text`` is exactly one bsx."""
    if not text:
        raise MalformedBsx(0, "empty input")
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise MalformedBsx(i, "unbalanced ')'")
        else:
            raise MalformedBsx(i, f"illegal character {ch!r}")
        if depth == 0 and i != len(text) - 1:
            raise MalformedBsx(i + 1, "parentheses balance before the end")
    if len(text) % 2:
        raise MalformedBsx(len(text), "odd length")
    if depth:
        raise MalformedBsx(len(text), f"{depth} unclosed '('")


def split_text(x: str) -> tuple[str, str]:
    """Head and tail of a bsx string by a single counter walk."""
    if x == NIL_TEXT:
        return NIL_TEXT, NIL_TEXT
    n = 1
    i = 1
    while True:
        i += 1
        if x[i] == "(":
            n += 1
        else:
            n -= 1
            if n == 0:
                break
    return x[1 : i + 1], x[0] + x[i + 1 :]


def join_text(x: str, y: str) -> str:
    """Prepend ``x`` as the new first item of the list ``y``."""
    return y[0] + x + y[1:]


def item_texts(x: str) -> list[str]:
    """Top-level items of a bsx string, in order."""
    items = []
    depth = 0
    start = 1
    for i in range(1, len(x) - 1):
        if x[i] == "(":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
            if depth == 0:
                items.append(x[start : i + 1])
    return items


class Bsx:
    """An immutable, validated bsx."""

    __slots__ = ("_text",)

    def __init__(self, text: str):
        validate(text)
        self._text = text

    @classmethod
    def _trusted(cls, text: str) -> Bsx:
        obj = cls.__new__(cls)
        obj._text = text
        return obj

    @property
    def text(self) -> str:
        return self._text

    @property
    def size(self) -> int:
        return (len(self._text) - 2) // 2

    @property
    def is_nil(self) -> bool:
        return self._text == NIL_TEXT

    def bits(self) -> str:
        return self._text.replace("(", "0").replace(")", "1")

    def items(self) -> list[Bsx]:
        """The ordered-tree view: children of the root, left to right."""
        return [Bsx._trusted(t) for t in item_texts(self._text)]

    def __iter__(self) -> Iterator[Bsx]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(item_texts(self._text))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Bsx):
            return self._text == other._text
        if isinstance(other, str):
            return self._text == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._text)

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"Bsx({self._text!r})"


NIL = Bsx._trusted(NIL_TEXT)
T = Bsx._trusted(T_TEXT)


def parse(text: str) -> Bsx:
    """Validate ``text`` (surrounding whitespace allowed) and return a :class:`Bsx`."""
    stripped = text.strip(_WHITESPACE)
    if not stripped:
        raise MalformedBsx(0, "empty input")
    offset = len(text) - len(text.lstrip(_WHITESPACE))
    try:
        validate(stripped)
    except MalformedBsx as exc:
        raise MalformedBsx(exc.position + offset, exc.reason) from None
    return Bsx._trusted(stripped)


def render(b: Bsx) -> str:
    return b.text


def size(b: Bsx) -> int:
    return b.size


def split(b: Bsx) -> tuple[Bsx, Bsx]:
    """``(head, tail)``; the head and tail of nil are both nil."""
    h, t = split_text(b.text)
    return Bsx._trusted(h), Bsx._trusted(t)


def head(b: Bsx) -> Bsx:
    return split(b)[0]


def tail(b: Bsx) -> Bsx:
    return split(b)[1]


def join(x: Bsx, y: Bsx) -> Bsx:
    return Bsx._trusted(join_text(x.text, y.text))


def from_items(items: list[Bsx]) -> Bsx:
    return Bsx._trusted("(" + "".join(i.text for i in items) + ")")


def from_bits(bits: str) -> Bsx:
    """Inverse of :meth:`Bsx.bits`; validates the result."""
    if set(bits) - {"0", "1"}:
        raise MalformedBsx(0, "bit string may only contain 0 and 1")
    return Bsx(bits.replace("0", "(").replace("1", ")"))


def all_of_size(n: int) -> Iterator[str]:
    """Every bsx string of size ``n``, by filtering all placements of ``'('``.

    Deliberately brute force: it is the oracle the codec is checked against.
    """
    width = 2 * n
    for opens in combinations(range(width), n):
        chars = [")"] * width
        for i in opens:
            chars[i] = "("
        # inside the outer pair the running depth may touch 0 but never go below
        depth = 0
        for ch in chars:
            depth += 1 if ch == "(" else -1
            if depth < 0:
                break
        else:
            yield "(" + "".join(chars) + ")"
