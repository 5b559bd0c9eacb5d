"""BILL, a Lisp whose only symbols are parentheses.

Every value, variable name, function and environment is a bsx.  A list with a
single item is a variable; a list whose head evaluates to nil is a quote; a
header ``join(body, vars)`` with non-nil ``vars`` is a defined function, and a
header ``(b)`` is the primitive with code ``decode(b)``:

    0 if   1 join   2 head   3 tail   4 out

Evaluation runs on an explicit continuation stack, so deep programs are bounded
by :class:`EvalLimits` rather than by the Python recursion limit.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import TextIO

from bsxkit.bsx import NIL_TEXT, T_TEXT, Bsx, join_text, split_text, validate
from bsxkit.catalan import catalan_sum
from bsxkit.errors import DepthExceeded, FuelExhausted, MalformedBsx
from bsxkit.numcodec import decode, encode_text

IF, JOIN, HEAD, TAIL, OUT = range(5)
PRIMITIVE_CODES = {encode_text(k): k for k in range(5)}


def primitive_header(code: int) -> Bsx:
    """The function header for a primitive: ``join(encode(code), nil)``."""
    return Bsx._trusted(join_text(encode_text(code), NIL_TEXT))


@dataclass(frozen=True)
class EvalLimits:
    fuel: int = 10**6
    depth: int = 10**4

    def __post_init__(self):
        if self.fuel < 1 or self.depth < 1:
            raise ValueError("fuel and depth must be >= 1")


@dataclass
class OutputSink:
    """Destination for ``out``; always captured, optionally echoed to a stream."""

    stream: TextIO | None = None
    fmt: str = "parens"
    lines: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.fmt not in ("parens", "decimal"):
            raise ValueError(f"unknown output format {self.fmt!r}")

    def write(self, value: str) -> None:
        line = value if self.fmt == "parens" else str(decode(value))
        self.lines.append(line)
        if self.stream is not None:
            print(line, file=self.stream, flush=True)


def _head(x: str) -> str:
    return split_text(x)[0]


def _tail(x: str) -> str:
    return split_text(x)[1]


def _lookup(v: str, e: str) -> str:
    while e != NIL_TEXT:
        name, rest = split_text(e)
        value, e = split_text(rest)
        if name == v:
            return value
    # unbound variables evaluate to their own name
    return v


# continuation frames
_FN, _ARG, _PRIM, _JOIN2 = range(4)


class Evaluator:
    """Single-owner evaluation state: remaining fuel and the output sink."""

    def __init__(self, limits: EvalLimits | None = None, sink: OutputSink | None = None):
        self.limits = limits or EvalLimits()
        self.sink = sink if sink is not None else OutputSink()
        self.fuel = self.limits.fuel

    def eval_text(self, s: str, e: str = NIL_TEXT) -> str:
        depth_limit = self.limits.depth
        stack: list[tuple] = []
        evaluating = True
        value = NIL_TEXT
        while True:
            if evaluating:
                self.fuel -= 1
                if self.fuel < 0:
                    raise FuelExhausted(f"fuel of {self.limits.fuel} evaluations used up")
                if len(stack) > depth_limit:
                    raise DepthExceeded(f"nesting deeper than {depth_limit}")
                if s == NIL_TEXT or s == T_TEXT:
                    value = s
                    evaluating = False
                    continue
                h, t = split_text(s)
                if t == NIL_TEXT:
                    value = _lookup(h, e)
                    evaluating = False
                    continue
                stack.append((_FN, t, e))
                s = h
                continue

            if not stack:
                return value
            frame = stack.pop()
            kind = frame[0]
            if kind == _FN:
                _, t, e = frame
                if value == NIL_TEXT:
                    # quote: the argument list itself, unevaluated
                    value = t
                    continue
                body, params = split_text(value)
                if params != NIL_TEXT:
                    stack.append((_ARG, body, t, params, e, e))
                else:
                    stack.append((_PRIM, body, t, e))
                s = _head(t)
                evaluating = True
            elif kind == _ARG:
                # arguments are evaluated in the caller's environment, bound into n
                _, body, t, params, e, n = frame
                name, params = split_text(params)
                n = join_text(name, join_text(value, n))
                t = _tail(t)
                if params == NIL_TEXT:
                    s, e = body, n
                else:
                    stack.append((_ARG, body, t, params, e, n))
                    s = _head(t)
                evaluating = True
            elif kind == _PRIM:
                _, code_text, t, e = frame
                code = PRIMITIVE_CODES.get(code_text)
                if code == IF:
                    # only the chosen branch is evaluated
                    rest = _tail(t)
                    s = _head(_tail(rest)) if value == NIL_TEXT else _head(rest)
                    evaluating = True
                elif code == JOIN:
                    stack.append((_JOIN2, value))
                    s = _head(_tail(t))
                    evaluating = True
                elif code == HEAD:
                    value = _head(value)
                elif code == TAIL:
                    value = _tail(value)
                elif code == OUT:
                    self.sink.write(value)
                # any other code returns its first argument
            else:
                value = join_text(frame[1], value)

    def eval(self, s: Bsx, e: Bsx | None = None) -> Bsx:
        return Bsx._trusted(self.eval_text(s.text, NIL_TEXT if e is None else e.text))

    def pass_args(self, t: Bsx, v: Bsx, e: Bsx) -> Bsx:
        args, params, env = t.text, v.text, e.text
        n = env
        while params != NIL_TEXT:
            value = self.eval_text(_head(args), env)
            name, params = split_text(params)
            n = join_text(name, join_text(value, n))
            args = _tail(args)
        return Bsx._trusted(n)


def evaluate(
    s: Bsx,
    e: Bsx | None = None,
    limits: EvalLimits | None = None,
    sink: OutputSink | None = None,
) -> Bsx:
    """Value of ``s`` in environment ``e`` (default: the empty environment).

    Raises :class:`FuelExhausted` or :class:`DepthExceeded` when a limit trips.
    """
    return Evaluator(limits, sink).eval(s, e)


def lookup_value(v: Bsx, e: Bsx) -> Bsx:
    """Value bound to ``v`` in the innermost frame of ``e``, or ``v`` if unbound."""
    return Bsx._trusted(_lookup(v.text, e.text))


def pass_args(
    t: Bsx, v: Bsx, e: Bsx, limits: EvalLimits | None = None, sink: OutputSink | None = None
) -> Bsx:
    """Bind each name in ``v`` to the value in ``e`` of the matching item of ``t``."""
    return Evaluator(limits, sink).pass_args(t, v, e)


def bind(e: Bsx, name: Bsx, value: Bsx) -> Bsx:
    """``e`` extended with one frame, the layout :func:`pass_args` builds."""
    return Bsx._trusted(join_text(name.text, join_text(value.text, e.text)))


def quote_text(x: str) -> str:
    if x == NIL_TEXT or x == T_TEXT:
        return x
    return join_text(NIL_TEXT, x)


def quote(x: Bsx) -> Bsx:
    """An expression whose value is ``x`` in every environment."""
    return Bsx._trusted(quote_text(x.text))


def _up_text(x: str) -> str | None:
    wraps = 0
    while True:
        if x == NIL_TEXT:
            result = T_TEXT
            break
        if x == T_TEXT:
            result = join_text(NIL_TEXT, T_TEXT)
            break
        h, t = split_text(x)
        if t != NIL_TEXT:
            return None
        x = h
        wraps += 1
    for _ in range(wraps):
        result = join_text(NIL_TEXT, result)
    return result


def up(x: Bsx) -> Bsx | None:
    """Successor of ``x`` if ``x`` is the last bsx of its size, else ``None``."""
    r = _up_text(x.text)
    return None if r is None else Bsx._trusted(r)


def _succ_text(x: str) -> str:
    # Each step descends into the head or the tail; `pending` records how to
    # rebuild: (True, t) means join(r, t), (False, h) means join(h, r).
    pending: list[tuple[bool, str]] = []
    while True:
        if x == NIL_TEXT:
            result = T_TEXT
            break
        wrapped = _up_text(x)
        if wrapped is not None:
            result = wrapped
            break
        h, t = split_text(x)
        if t == NIL_TEXT:
            pending.append((True, t))
            x = h
            continue
        u = _up_text(t)
        if u is None:
            pending.append((False, h))
            x = t
            continue
        v = _up_text(h)
        if v is None:
            # next head, and the tail restarts at the first of its size
            pending.append((True, _tail(u)))
            x = h
            continue
        result = join_text(v, _tail(_tail(u)))
        break
    for head_side, other in reversed(pending):
        result = join_text(result, other) if head_side else join_text(other, result)
    return result


def succ(x: Bsx) -> Bsx:
    """The next bsx in numeric order, computed structurally."""
    return Bsx._trusted(_succ_text(x.text))


def godel_expression(x: int, args: Sequence[int]) -> Bsx:
    """The program applying the function numbered ``x`` to quoted ``args``."""
    fn = encode_text(x)
    # nil must stay self-quoting; every other header is quoted by a raw join,
    # which keeps the no-argument value at num_join(0, x)
    fn_quoted = NIL_TEXT if x == 0 else join_text(NIL_TEXT, fn)
    return Bsx._trusted("(" + fn_quoted + "".join(quote_text(encode_text(y)) for y in args) + ")")


def godel_apply(x: int, args: Sequence[int], limits: EvalLimits | None = None) -> int:
    """Value of the partial recursive function with Gödel number ``x`` at ``args``."""
    expr = godel_expression(x, args)
    return decode(Evaluator(limits).eval_text(expr.text))


# --- program reader -------------------------------------------------------


def _literal(token: str) -> str:
    if set(token) == {"0"}:
        # k zeros name S_{k-1}
        n = catalan_sum(len(token) - 1)
    else:
        n = int(token)
    return quote_text(encode_text(n))


def read_program(source: str) -> list[Bsx]:
    """Parse BILL source into its top-level expressions.

    ``;`` starts a comment running to the end of the line.  A run of digits is a
    constant: ``k`` zeros stand for ``S_{k-1}``, any other decimal for itself.
    """
    out = []
    for lineno, line in enumerate(source.splitlines(keepends=True)):
        code = line.split(";", 1)[0]
        i = 0
        while i < len(code):
            ch = code[i]
            if ch in "()":
                out.append(ch)
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(code) and code[j].isdigit():
                    j += 1
                text = _literal(code[i:j])
                out.append(text)
                i = j
            elif ch.isspace():
                i += 1
            else:
                raise MalformedBsx(i, f"illegal character {ch!r} on line {lineno + 1}")
    text = "".join(out)
    exprs = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        depth += 1 if ch == "(" else -1
        if depth < 0:
            raise MalformedBsx(i, "unbalanced ')'")
        if depth == 0:
            piece = text[start : i + 1]
            validate(piece)
            exprs.append(Bsx._trusted(piece))
            start = i + 1
    if depth:
        raise MalformedBsx(len(text), "unterminated expression")
    return exprs


def run_program(
    source: str, limits: EvalLimits | None = None, sink: OutputSink | None = None
) -> list[Bsx]:
    """Evaluate each top-level expression in the empty environment, sharing fuel."""
    ev = Evaluator(limits, sink)
    return [ev.eval(expr) for expr in read_program(source)]


def repl(stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout, limits: EvalLimits | None = None) -> None:
    sink = OutputSink(stream=stdout)
    buffer = ""
    for line in stdin:
        buffer += line
        try:
            exprs = read_program(buffer)
        except MalformedBsx as exc:
            if "unterminated" in exc.reason:
                continue
            print(f"error: {exc}", file=stdout)
            buffer = ""
            continue
        buffer = ""
        for expr in exprs:
            try:
                print(Evaluator(limits, sink).eval(expr), file=stdout, flush=True)
            except (FuelExhausted, DepthExceeded) as exc:
                print(f"error: {type(exc).__name__}: {exc}", file=stdout, flush=True)
