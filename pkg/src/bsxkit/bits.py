"""The prefix-free bsx bit code, its two streaming decoders, and message framing.

A codeword is ``encode(x)`` with the leading ``'('`` dropped, written with
``0`` for ``'('`` and ``1`` for ``')'``.  Bit strings are plain ``str`` objects
over ``"01"``.
"""

from __future__ import annotations

import struct
from collections.abc import Iterable
from dataclasses import dataclass

from bsxkit.catalan import lgx
from bsxkit.errors import InvalidStart, MalformedCodeword, TrailingBits, TruncatedCodeword
from bsxkit.numcodec import encode_text, num_join

_OPEN = -1  # stack marker for an unclosed '('; real values are >= 0

_TO_BITS = str.maketrans("()", "01")


def codeword(x: int) -> str:
    return encode_text(x)[1:].translate(_TO_BITS)


def codeword_len(x: int) -> int:
    return 2 * lgx(x) + 1


def _as_bits(bits: str | Iterable[int]) -> str:
    if isinstance(bits, str):
        if set(bits) - {"0", "1"}:
            raise ValueError("bit strings may only contain '0' and '1'")
        return bits
    return "".join("1" if b else "0" for b in bits)


class PreorderDecoder:
    """Instantaneous decoder: push one bit at a time, the value is known on the last.

    The stack holds ``_OPEN`` for each unclosed ``'('`` and, above it, the values
    of the items already completed in that list.  A ``1`` folds those items
    right to left with :func:`num_join` and the folded list replaces its marker.
    """

    def __init__(self):
        self._stack: list[int] = []
        self._open = 0
        self._started = False
        self.value: int | None = None
        self.consumed = 0

    @property
    def done(self) -> bool:
        return self.value is not None

    def feed(self, bit: int) -> bool:
        """Consume one bit; return True once the codeword is complete."""
        if self.done:
            raise TrailingBits(f"bit {self.consumed} follows a complete codeword")
        self.consumed += 1
        if not self._started:
            self._started = True
            if bit:
                self.value = 0
                return True
            # the implicit leading '(' plus this one
            self._stack = [_OPEN, _OPEN]
            self._open = 2
            return False
        stack = self._stack
        if not bit:
            self._open += 1
            stack.append(_OPEN)
            return False
        v = 0
        while stack[-1] != _OPEN:
            v = num_join(stack.pop(), v)
        self._open -= 1
        if self._open == 0:
            self.value = v
            return True
        stack[-1] = v
        return False

    def complete(self) -> int:
        """Close every dangling ``'('`` as if the missing ``1`` bits had arrived."""
        if self.done:
            return self.value
        if not self._started:
            self.value = 0
            return 0
        stack = self._stack
        v = 0
        while True:
            top = stack.pop()
            if top != _OPEN:
                v = num_join(top, v)
                continue
            self._open -= 1
            if self._open == 0:
                self.value = v
                return v
            # the closed list becomes the last item of its parent
            v = num_join(v, 0)


def decode_preorder(bits: str | Iterable[int], strict: bool = True) -> int:
    """Decode a codeword reading bits front to back.

    In lenient mode a truncated codeword is completed with ``1`` bits and
    anything after a complete codeword is ignored.
    """
    bits = _as_bits(bits)
    if strict:
        if not bits:
            raise TruncatedCodeword("empty input")
        if bits[0] == "1" and len(bits) > 1:
            raise InvalidStart("a codeword starting with 1 is exactly '1'")
    dec = PreorderDecoder()
    for i, ch in enumerate(bits):
        if dec.feed(ch == "1"):
            if strict and i != len(bits) - 1:
                raise TrailingBits(f"{len(bits) - i - 1} bits after a complete codeword")
            return dec.value
    if strict:
        raise TruncatedCodeword(f"codeword incomplete after {len(bits)} bits")
    return dec.complete()


def decode_postorder(bits: str | Iterable[int]) -> int:
    """Decode a codeword reading bits back to front.

    Each ``1`` is a nil leaf (push 0); each ``0`` joins the two values on top.
    """
    bits = _as_bits(bits)
    if not bits:
        raise MalformedCodeword("empty input")
    stack: list[int] = []
    for pos in range(len(bits) - 1, -1, -1):
        if bits[pos] == "1":
            stack.append(0)
            continue
        if len(stack) < 2:
            raise MalformedCodeword(f"bit {pos}: join needs two values on the stack")
        h = stack.pop()
        t = stack.pop()
        stack.append(num_join(h, t))
    if len(stack) != 1:
        raise MalformedCodeword(f"{len(stack)} values left on the stack")
    return stack[0]


def frame(x: int) -> str:
    """Start bit 0, sync bit 1, then the codeword."""
    return "01" + codeword(x)


@dataclass
class DeframeResult:
    messages: list[int]
    desync_recovered: int = 0


_IDLE, _START, _NOISE, _BODY = range(4)


def deframe(stream: str | Iterable[int]) -> DeframeResult:
    """Recover the messages from a bit stream of idle 1s and frames.

    A start bit followed by another 0 is treated as noise: everything up to the
    next 1 is skipped and counted in ``desync_recovered``.
    """
    stream = _as_bits(stream)
    result = DeframeResult([])
    state = _IDLE
    dec = None
    for ch in stream:
        bit = ch == "1"
        if state == _IDLE:
            if not bit:
                state = _START
        elif state == _START:
            if bit:
                state = _BODY
                dec = PreorderDecoder()
            else:
                state = _NOISE
                result.desync_recovered += 1
        elif state == _NOISE:
            if bit:
                state = _IDLE
        elif dec.feed(bit):
            result.messages.append(dec.value)
            state = _IDLE
    if state in (_START, _BODY):
        raise TruncatedCodeword("stream ends inside a frame")
    return result


# Packed format: 8-byte big-endian bit count, then the bits MSB-first,
# the final byte zero-padded.
_HEADER = struct.Struct(">Q")


def pack_bits(bits: str) -> bytes:
    bits = _as_bits(bits)
    padded = bits + "0" * (-len(bits) % 8)
    body = int(padded, 2).to_bytes(len(padded) // 8, "big") if padded else b""
    return _HEADER.pack(len(bits)) + body


def unpack_bits(data: bytes) -> str:
    if len(data) < _HEADER.size:
        raise ValueError("packed bits: missing header")
    (count,) = _HEADER.unpack_from(data)
    body = data[_HEADER.size :]
    if len(body) != (count + 7) // 8:
        raise ValueError(f"packed bits: header says {count} bits, body has {len(body)} bytes")
    if not body:
        return ""
    text = format(int.from_bytes(body, "big"), f"0{8 * len(body)}b")
    if "1" in text[count:]:
        raise ValueError("packed bits: padding is not zero")
    return text[:count]


def read_bits(text: str) -> str:
    """Parse the human-facing text form: ``0``/``1`` with whitespace ignored."""
    bits = "".join(text.split())
    return _as_bits(bits)
