"""The bsx family of distributions on the naturals.

``weight(x) = z**lgx(x) / G(z)`` where ``G`` is the Catalan generating
function.  Writing ``p0 = 1/G(z)`` (the probability of 0) gives
``z = p0 * (1 - p0)``, so a rational ``p0`` makes every weight rational; that
is the exact mode used for the identity checks.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from bsxkit.catalan import catalan, catalan_sum, lgx
from bsxkit.errors import DivergentMoment, OutOfRange, SizeCapExceeded
from bsxkit.numcodec import num_split, unpack

Number = Union[Fraction, float]

QUARTER = Fraction(1, 4)
SIXTEENTH = Fraction(1, 16)


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _as_number(value: object) -> Number:
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value) if "/" in value else float(value)
    return float(value)


@dataclass(frozen=True)
class BsxDistribution:
    """Parameter ``z`` in ``(0, 1/4]`` together with ``p0 = 1/G(z)``.

    When ``exact`` is true, ``z`` and ``p0`` are :class:`Fraction` values.
    """

    z: Number
    p0: Number
    exact: bool

    @property
    def G(self) -> Number:
        return 1 / self.p0

    def __str__(self) -> str:
        return f"BsxDistribution(z={self.z}, p0={self.p0})"


def make_dist(p0: Fraction | int | str) -> BsxDistribution:
    """Exact-mode distribution from a rational ``p0`` in ``[1/2, 1)``."""
    p0 = Fraction(p0)
    if not (Fraction(1, 2) <= p0 < 1):
        raise OutOfRange(f"p0 = {p0} is outside [1/2, 1)")
    return BsxDistribution(z=p0 * (1 - p0), p0=p0, exact=True)


def from_z(z: Fraction | float | str) -> BsxDistribution:
    """Distribution with parameter ``z``; exact when ``sqrt(1 - 4z)`` is rational."""
    z = _as_number(z)
    if not (0 < z <= QUARTER):
        raise OutOfRange(f"z = {z} is outside (0, 1/4]")
    if isinstance(z, Fraction):
        root = _exact_sqrt(1 - 4 * z)
        if root is not None:
            # G = (1 - root) / 2z and p0 = 1/G = (1 + root) / 2
            return BsxDistribution(z=z, p0=(1 + root) / 2, exact=True)
        z = float(z)
    p0 = (1 + math.sqrt(1 - 4 * z)) / 2
    return BsxDistribution(z=z, p0=p0, exact=False)


def generating_function(z: float) -> float:
    """``G(z) = (1 - sqrt(1 - 4z)) / 2z``, the value of ``sum C_n z**n``."""
    if not (0 < z <= 0.25):
        raise OutOfRange(f"z = {z} is outside (0, 1/4]")
    return (1 - math.sqrt(1 - 4 * z)) / (2 * z)


def weight(d: BsxDistribution, x: int) -> Number:
    return d.p0 * d.z ** lgx(x)


def pr_size(d: BsxDistribution, n: int) -> Number:
    """Probability that the size ``lgx(X)`` equals ``n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if d.exact:
        return catalan(n) * d.z**n * d.p0
    return math.exp(math.log(catalan(n)) + n * math.log(d.z) + math.log(d.p0))


def mean_size(d: BsxDistribution) -> Number:
    """Expected size, ``(1/sqrt(1 - 4z) - 1) / 2``."""
    if d.z == QUARTER or d.p0 == 0.5:
        raise DivergentMoment("the mean size is infinite at z = 1/4")
    # sqrt(1 - 4z) = 2 p0 - 1
    return (1 - d.p0) / (2 * d.p0 - 1)


def z_from_mean_size(nu: Fraction | float | str) -> BsxDistribution:
    """Inverse of :func:`mean_size`: ``z = (nu**2 + nu) / (2 nu + 1)**2``."""
    nu = _as_number(nu)
    if not nu > 0:
        raise OutOfRange(f"mean size {nu} must be positive")
    if isinstance(nu, Fraction):
        return BsxDistribution(
            z=(nu * nu + nu) / (2 * nu + 1) ** 2, p0=(nu + 1) / (2 * nu + 1), exact=True
        )
    return from_z((nu * nu + nu) / (2 * nu + 1) ** 2)


def mean_list_len(d: BsxDistribution) -> Number:
    return (1 - d.p0) / d.p0


def pr_list_len(d: BsxDistribution, m: int) -> Number:
    """The number of top-level items is geometric with parameter ``p0``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return d.p0 * (1 - d.p0) ** m


def z_from_mean_list_len(mu: Fraction | float | str) -> BsxDistribution:
    """Inverse of :func:`mean_list_len`: ``z = mu / (1 + mu)**2``."""
    mu = _as_number(mu)
    if not (0 < mu <= 1):
        raise OutOfRange(f"mean list length {mu} is outside (0, 1]")
    if isinstance(mu, Fraction):
        return BsxDistribution(z=mu / (1 + mu) ** 2, p0=1 / (1 + mu), exact=True)
    return from_z(mu / (1 + mu) ** 2)


class SeriesValue(NamedTuple):
    value: float
    tail_bound: float
    terms: int


def mean_value(d: BsxDistribution, tol: float = 1e-8) -> SeriesValue:
    """Expected value of ``X`` itself; finite only for ``z <= 1/16``.

    Sums ``p0 z^n C_n (S_n + C_n/2)`` until the term is below ``tol`` times the
    running sum and the rigorous tail bound is below ``tol``.  The bound uses
    ``C_n < 4^n / (sqrt(pi) n^1.5)`` and ``S_n <= (16/9) C_{n-1}``.
    """
    if d.z > SIXTEENTH:
        raise DivergentMoment(f"E[X] diverges for z = {d.z} > 1/16")
    z = float(d.z)
    p0 = float(d.p0)
    log_z = math.log(z)
    log_p0 = math.log(p0)
    ratio = 16 * z
    total = 0.0
    n = 0
    while True:
        c = catalan(n)
        # C_n (S_n + C_n / 2) = C_n (2 S_n + C_n) / 2
        term = math.exp(log_p0 + n * log_z + math.log(c) + math.log(2 * catalan_sum(n) + c) - math.log(2))
        total += term
        if n >= 2:
            excess = 0.5 + 16 * (n + 2) / (9 * (4 * n + 2))
            bound = p0 * excess * ratio ** (n + 1) / (2 * math.pi * n * n)
            if term < tol * total and bound < tol:
                return SeriesValue(total - 0.5, bound, n + 1)
        n += 1


def entropy_size(d: BsxDistribution, tol: float = 1e-10) -> SeriesValue:
    """Entropy in bits of the size ``lgx(X)``; no closed form is known."""
    if d.z >= QUARTER:
        raise DivergentMoment("the size entropy is infinite at z = 1/4")
    z = float(d.z)
    p0 = float(d.p0)
    log_z = math.log(z)
    log_p0 = math.log(p0)
    a = -math.log2(p0)
    b = -math.log2(z)
    rho = 4 * z
    total = 0.0
    n = 0
    while True:
        log_p = log_p0 + math.log(catalan(n)) + n * log_z
        term = -math.exp(log_p) * log_p / math.log(2)
        total += term
        if n >= 1:
            # P_n <= p0 (4z)^n / (sqrt(pi) n^1.5) and -log2 P_n <= a + b n
            bound = p0 / math.sqrt(math.pi) * (a / n**1.5 + b / math.sqrt(n)) * rho ** (n + 1) / (1 - rho)
            if term < tol * max(total, tol) and bound < tol:
                return SeriesValue(total, bound, n + 1)
        n += 1


def entropy_curve(start: float, stop: float, step: float) -> list[tuple[float, float]]:
    """``(z, entropy_size)`` rows for ``z`` from ``start`` to ``stop`` inclusive."""
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    rows = []
    for i in range(count):
        z = round(start + i * step, 12)
        rows.append((z, entropy_size(from_z(z)).value))
    return rows


def kraft_sigma_partial(K: int) -> float:
    """``sum of 2**-codeword_len(x)`` over ``lgx(x) <= K``, i.e. ``1/2 sum C_n 4**-n``."""
    if K < 0:
        raise ValueError("K must be non-negative")
    # t_n = C_n / 4^n via its term ratio, so nothing overflows
    t = 1.0
    total = 1.0
    for n in range(1, K + 1):
        t *= (4 * n - 2) / (4 * (n + 1))
        total += t
    return total / 2


@dataclass
class SampleConfig:
    seed: int | None = None
    count: int = 1
    max_size: int = 10_000

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")


@dataclass
class _SizeTable:
    # cumulative Pr(N <= n), extended lazily
    z: float
    p0: float
    cdf: list[float] = field(default_factory=list)
    pn: float = 0.0
    exhausted: bool = False

    def extend_to(self, u: float, limit: int) -> None:
        while not self.exhausted and (not self.cdf or self.cdf[-1] <= u) and len(self.cdf) <= limit:
            n = len(self.cdf)
            if n == 0:
                self.pn = self.p0
                self.cdf.append(self.pn)
                continue
            self.pn *= self.z * (4 * n - 2) / (n + 1)
            new = self.cdf[-1] + self.pn
            if new == self.cdf[-1]:
                # remaining mass is below float resolution
                self.exhausted = True
                break
            self.cdf.append(new)


def sample(d: BsxDistribution, cfg: SampleConfig) -> list[int]:
    """Draw ``cfg.count`` values: size ``N`` by inverse CDF, then a uniform rank.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``cfg.seed``.  The
    size-law tail below float resolution is assigned to the last tabulated size.
    """
    if d.z >= QUARTER:
        raise OutOfRange("sampling needs z < 1/4")
    rng = random.Random(cfg.seed)
    table = _SizeTable(float(d.z), float(d.p0))
    out = []
    for _ in range(cfg.count):
        u = rng.random()
        table.extend_to(u, cfg.max_size)
        n = min(bisect_right(table.cdf, u), len(table.cdf) - 1)
        if u >= table.cdf[-1] and not table.exhausted:
            raise SizeCapExceeded(f"drawn size exceeds max_size = {cfg.max_size}")
        if n > cfg.max_size:
            raise SizeCapExceeded(f"drawn size {n} exceeds max_size = {cfg.max_size}")
        out.append(catalan_sum(n) + rng.randrange(catalan(n)))
    return out


class FixedPointReport(NamedTuple):
    x: int
    items: list[int]
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _require_exact(d: BsxDistribution) -> None:
    if not d.exact:
        raise ValueError("this check needs an exact-mode distribution")


def fixed_point_check(d: BsxDistribution, x: int) -> FixedPointReport:
    """Compare ``weight(x)`` with ``p0 (1-p0)^m prod weight(item)`` over the items of ``x``."""
    _require_exact(d)
    items = unpack(x)
    rhs = d.p0 * (1 - d.p0) ** len(items)
    for item in items:
        rhs *= weight(d, item)
    return FixedPointReport(x, items, weight(d, x), rhs)


class PushforwardReport(NamedTuple):
    checked: int
    failures: list[int]

    @property
    def holds(self) -> bool:
        return not self.failures


def join_pushforward_check(d: BsxDistribution, bound: int) -> PushforwardReport:
    """For ``a`` in ``[1, bound]``: ``weight(nh a) weight(nt a) == weight(a) / (z G)``."""
    _require_exact(d)
    zg = d.z * d.G
    failures = []
    for a in range(1, bound + 1):
        h, t = num_split(a)
        if weight(d, h) * weight(d, t) != weight(d, a) / zg:
            failures.append(a)
    return PushforwardReport(bound, failures)
