"""Exception hierarchy shared by every bsxkit module."""

from __future__ import annotations


class BsxError(Exception):
    """Base class for domain errors (the CLI maps these to exit status 1)."""


class MalformedBsx(BsxError, ValueError):
    def __init__(self, position: int, reason: str):
        super().__init__(f"malformed bsx at index {position}: {reason}")
        self.position = position
        self.reason = reason


class SizeTooLarge(BsxError):
    pass


class TruncatedCodeword(BsxError):
    pass


class TrailingBits(BsxError):
    pass


class InvalidStart(BsxError):
    pass


class MalformedCodeword(BsxError):
    pass


class OutOfRange(BsxError, ValueError):
    pass


class DivergentMoment(BsxError):
    pass


class SizeCapExceeded(BsxError):
    pass


class EvalLimitError(BsxError):
    """Evaluation was cut off by an :class:`~bsxkit.bill.EvalLimits` budget."""


class FuelExhausted(EvalLimitError):
    pass


class DepthExceeded(EvalLimitError):
    pass
