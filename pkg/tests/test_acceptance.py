"""The fourteen acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line, then asserts.  Run with
``pytest tests/test_acceptance.py -v`` or directly with ``python3
tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import sys
import time
from fractions import Fraction

import pytest
from scipy import stats

from bsxkit import bill, dist
from bsxkit.bill import EvalLimits, primitive_header, quote
from bsxkit.bits import codeword, decode_postorder, decode_preorder
from bsxkit.bsx import NIL, T, Bsx, all_of_size, join
from bsxkit.catalan import catalan, catalan_sum, lgx, stirling_theta, sum_ratio
from bsxkit.errors import DivergentMoment, FuelExhausted
from bsxkit.numcodec import decode, encode, encode_text, num_join, num_split

F = Fraction
_printer = None


def _print(line: str) -> None:
    if _printer is None:
        print(line)
    else:
        with _printer.disabled():
            print(line)


@pytest.fixture(autouse=True)
def _visible_output(capsys):
    global _printer
    _printer = capsys
    yield
    _printer = None


class Criterion:
    """Collects named checks and a time budget, then reports one line."""

    def __init__(self, number: int, title: str, budget: float | None = None):
        self.number = number
        self.title = title
        self.budget = budget
        self.failures: list[str] = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def check(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.failures.append(f"raised {exc_type.__name__}: {exc}")
        if self.budget is not None and elapsed > self.budget:
            self.failures.append(f"took {elapsed:.1f}s, budget {self.budget}s")
        status = "PASS" if not self.failures else "FAIL"
        detail = "" if not self.failures else " -- " + "; ".join(self.failures)
        _print(f"{status} criterion {self.number:2d}: {self.title} ({elapsed:.2f}s){detail}")
        assert not self.failures, "; ".join(self.failures)
        return True


def _codeword_of_text(s: str) -> str:
    return s[1:].replace("(", "0").replace(")", "1")


def test_01_codeword_goldens():
    with Criterion(1, "codewords of 0..3", budget=0.05) as c:
        c.check([codeword(x) for x in range(4)] == ["1", "011", "01011", "00111"], "goldens")


def test_02_catalan_constants():
    with Criterion(2, "C_19 and C_20", budget=0.05) as c:
        c.check(catalan(19) == 1_767_263_190, "C_19")
        c.check(catalan(20) == 6_564_120_420, "C_20")


def test_03_bijection_suite():
    with Criterion(3, "bijection suite", budget=30) as c:
        c.check(all(decode(encode(x)) == x for x in range(100_001)), "round trip to 1e5")
        rng = random.Random(20250101)
        big = [rng.randrange(10**599, 10**600) for _ in range(100)]
        c.check(all(decode(encode(x)) == x for x in big), "600-digit round trip")
        c.check(
            all(num_split(num_join(a, b)) == (a, b) for a in range(301) for b in range(301)),
            "split after join on [0,300]^2",
        )
        c.check(all(num_join(*num_split(x)) == x for x in range(1, 100_001)), "join after split on [1,1e5]")


def test_04_enumeration_oracle():
    with Criterion(4, "brute-force enumeration is contiguous", budget=60) as c:
        for n in range(11):
            ranks = sorted(decode(s) for s in all_of_size(n))
            c.check(len(ranks) == catalan(n), f"count at size {n}")
            c.check(ranks == list(range(catalan_sum(n), catalan_sum(n + 1))), f"ranks at size {n}")


def test_05_size_law():
    with Criterion(5, "lgx(decode(b)) = size(b)") as c:
        for n in range(9):
            c.check(all(lgx(decode(s)) == n for s in all_of_size(n)), f"size {n}")


def test_06_marginal_identities():
    with Criterion(6, "marginal join identities") as c:
        for x in range(10_001):
            n = lgx(x)
            e = encode_text(x)
            c.check(num_join(0, x) == x + catalan(n), f"nj(0,{x})")
            c.check(num_join(x, 0) == x + catalan(n + 1), f"nj({x},0)")
            c.check(encode_text(num_join(x, 0)) == "(" + e + ")", f"string of nj({x},0)")
            c.check(encode_text(num_join(0, x)) == "(()" + e[1:], f"string of nj(0,{x})")
        x = 0
        for n in range(61):
            c.check(x == catalan_sum(n), f"iterate {n}")
            x = num_join(0, x)


def test_07_asymptotics():
    with Criterion(7, "Stirling correction, sum ratio, optimality ratio", budget=10) as c:
        c.check(all(-1 / (6 * n) < stirling_theta(n) < 0 for n in range(1, 501)), "theta bounds")
        c.check(abs(3 * catalan_sum(1000) / (4 * catalan(999)) - 1) < 0.002, "3 S/4 C")
        c.check(abs(sum_ratio(1000) - 1) < 0.002, "sum_ratio")
        x = catalan_sum(1000)
        ratio = (2 * lgx(x) + 1) / math.log2(x)
        c.check(1.0 <= ratio <= 1.02, f"optimality ratio {ratio:.5f}")


def test_08_prefix_freedom_and_kraft():
    with Criterion(8, "prefix-free codewords, Kraft partial sum", budget=60) as c:
        words = sorted(codeword(x) for x in range(10_000))
        # in sorted order any prefix would sit immediately before some extension
        c.check(len(set(words)) == len(words), "distinct")
        c.check(all(not b.startswith(a) for a, b in zip(words, words[1:])), "prefix-free")
        sigma = dist.kraft_sigma_partial(10_000)
        c.check(0.99 <= sigma < 1.0, f"sigma {sigma}")


def test_09_distribution_statistics():
    with Criterion(9, "Pr(0) and E[X] at z = 1/16, divergences", budget=5) as c:
        d = dist.from_z(F(1, 16))
        c.check(abs(float(dist.weight(d, 0)) - 0.9330) <= 1e-4, f"Pr(0) {float(d.p0)}")
        mv = dist.mean_value(d).value
        c.check(abs(mv - 0.0916) <= 5e-4, f"mean value {mv}")
        for z in (F(1, 15), F(3, 16), 0.07):
            try:
                dist.mean_value(dist.from_z(z))
                c.check(False, f"mean_value at z={z} should diverge")
            except DivergentMoment:
                pass
        quarter = dist.from_z(F(1, 4))
        for fn in (dist.mean_size, dist.entropy_size):
            try:
                fn(quarter)
                c.check(False, f"{fn.__name__} at z=1/4 should diverge")
            except DivergentMoment:
                pass


def test_10_exact_fixed_point():
    with Criterion(10, "exact fixed point and pushforward at p0 = 3/4", budget=30) as c:
        d = dist.make_dist(F(3, 4))
        c.check(d.z == F(3, 16), "z")
        for x in range(catalan_sum(7)):
            r = dist.fixed_point_check(d, x)
            c.check(isinstance(r.lhs, Fraction) and r.holds, f"fixed point at {x}")
        report = dist.join_pushforward_check(d, 500)
        c.check(report.holds and report.checked == 500, f"pushforward failures {report.failures[:5]}")


def test_11_closed_form_inverses():
    with Criterion(11, "closed-form inverses are exact") as c:
        d = dist.from_z(F(3, 16))
        c.check(d.exact and dist.mean_size(d) == F(1, 2), "mean_size(3/16)")
        c.check(dist.z_from_mean_size(F(1, 2)).z == F(3, 16), "z_from_mean_size(1/2)")
        c.check(dist.z_from_mean_list_len(F(1, 3)).z == F(3, 16), "z_from_mean_list_len(1/3)")


def test_12_sampling():
    with Criterion(12, "10^5 seeded draws at z = 3/16", budget=20) as c:
        d = dist.make_dist(F(3, 4))
        count = 100_000
        draws = dist.sample(d, dist.SampleConfig(seed=12345, count=count))
        sizes = [lgx(x) for x in draws]

        p = 0.75
        zeros = sum(1 for x in draws if x == 0) / count
        c.check(abs(zeros - p) <= 3 * math.sqrt(p * (1 - p) / count), f"Pr(X=0) {zeros}")

        probs = [float(dist.pr_size(d, n)) for n in range(400)]
        var = sum(n * n * q for n, q in enumerate(probs)) - 0.25
        mean = sum(sizes) / count
        c.check(abs(mean - 0.5) <= 3 * math.sqrt(var / count), f"mean lgx {mean}")

        # bins with expected count >= 5, the rest pooled into the last bin
        expected = []
        n = 0
        while count * probs[n] >= 5 and count * (1 - sum(probs[: n + 1])) >= 5:
            expected.append(count * probs[n])
            n += 1
        last = n
        expected.append(count - sum(expected))
        observed = [0] * (last + 1)
        for s in sizes:
            observed[min(s, last)] += 1
        pvalue = stats.chisquare(observed, expected).pvalue
        c.check(pvalue > 0.001, f"chi-square p = {pvalue:.4g}")


def test_13_decoder_agreement():
    with Criterion(13, "pre-order, post-order and codec decode agree", budget=60) as c:
        for x in range(10_001):
            bits = codeword(x)
            c.check(decode_preorder(bits) == decode_postorder(bits) == x, f"codeword of {x}")
        for n in range(11):
            for s in all_of_size(n):
                bits = _codeword_of_text(s)
                c.check(decode_preorder(bits) == decode_postorder(bits) == decode(s), f"bsx {s}")
        for x in range(3000):
            s = encode_text(x)
            for cut in range(1, len(s)):
                prefix = s[:cut]
                completed = prefix + ")" * (prefix.count("(") - prefix.count(")"))
                got = decode_preorder(_codeword_of_text(prefix), strict=False)
                c.check(got == decode(completed), f"lenient prefix {prefix}")


def _omega_loop() -> str:
    # (w w) where w = lambda X. (X X): never returns
    name = "(()())"
    var = "(" + name + ")"
    w = join(Bsx("(" + var + var + ")"), Bsx("(" + name + ")"))
    return "(" + quote(w).text + quote(w).text + ")"


def test_14_interpreter_suite():
    with Criterion(14, "BILL interpreter suite", budget=60) as c:
        c.check(bill.evaluate(NIL) == NIL and bill.evaluate(T) == T, "base cases")
        for n in range(7):
            for s in all_of_size(n):
                c.check(bill.evaluate(quote(Bsx(s))) == s, f"quote {s}")
        goldens = {"()": "()", "(()()())": "(()())", "((()(()))()(()))": "(()())"}
        for src, want in goldens.items():
            c.check(bill.evaluate(Bsx(src)) == want, f"eval {src}")

        lim = EvalLimits(fuel=1000)
        loop = _omega_loop()
        try:
            bill.evaluate(Bsx(loop), limits=lim)
            c.check(False, "loop should exhaust fuel")
        except FuelExhausted:
            pass
        if_fn = quote(primitive_header(bill.IF)).text
        x, y = quote(encode(2)).text, quote(encode(3)).text
        c.check(bill.evaluate(Bsx("(" + if_fn + T.text + x + loop + ")"), limits=lim) == encode(2), "then")
        c.check(bill.evaluate(Bsx("(" + if_fn + NIL.text + loop + y + ")"), limits=lim) == encode(3), "else")

        b = NIL
        for i in range(10_001):
            if b.text != encode_text(i):
                c.check(False, f"succ at {i}")
                break
            b = bill.succ(b)

        for n in range(9):
            last = catalan_sum(n + 1) - 1
            for s in all_of_size(n):
                r = bill.up(Bsx(s))
                want = encode(last + 1) if decode(s) == last else None
                c.check(r == want, f"up {s}")

        c.check(all(bill.godel_apply(x, []) == num_join(0, x) for x in range(1001)), "godel")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
