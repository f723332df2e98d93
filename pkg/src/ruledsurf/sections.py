"""Brute-force section counting and the exact asymptotic volume.

For a split bundle the pushforward of O_X(a) twisted by a degree-b
pullback decomposes into line bundles on the curve, one per lattice point
k in Z^r_{>=0} with sum(k) = a, of degree sum(k_i d_i) + b.  The per-point
count is only known up to bounds (Riemann-Roch from below, Clifford from
above in the special range), so the result type is an interval.

The exact limit lim r! h^0(mD)/m^r is the integral of the positive part
of the linear form over the dilated simplex; by Hermite-Genocchi it
equals a^(r-1) times the divided difference of t -> max(t, 0)^r over the
vertex values v_i = a*d_i + b.  Repeated vertex values are handled as
confluent knots (derivative entries), never by perturbation.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .bundles import Curve
from .surfaces import NumClass, RuledSurface


@dataclass(frozen=True)
class H0Interval:
    """Certified bounds lo <= h^0 <= hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi:
            raise ValueError("interval needs 0 <= lo <= hi")

    def __add__(self, other: "H0Interval") -> "H0Interval":
        return H0Interval(self.lo + other.lo, self.hi + other.hi)


class Verdict(enum.Enum):
    BIG_CERTIFIED = "BIG_CERTIFIED"
    NOT_BIG_CERTIFIED = "NOT_BIG_CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class GrowthReport:
    samples: tuple[tuple[int, H0Interval], ...]
    verdict: Verdict
    fitted_lo_coefficient: Fraction


def h0_interval_curve(curve: Curve, degree: int) -> H0Interval:
    """Bounds for h^0 of a degree-d line bundle on the curve.

    d < 0 gives [0, 0]; d = 0 gives [0, 1] (the twist may or may not be
    trivial); in the special range 0 < d <= 2g-2 the Euler characteristic
    bounds from below and Clifford's inequality from above; beyond 2g-2
    the count d - g + 1 is exact.
    """
    g = curve.genus
    if degree < 0:
        return H0Interval(0, 0)
    if degree == 0:
        return H0Interval(0, 1)
    if degree > 2 * g - 2:
        exact = degree - g + 1
        return H0Interval(exact, exact)
    return H0Interval(max(0, degree - g + 1), degree // 2 + 1)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All k in Z^parts_{>=0} with sum(k) = total, streamed."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def h0_class_interval(surface: RuledSurface, cls: NumClass) -> H0Interval:
    """Sum the curve intervals over the lattice slice sum(k) = a.

    The class (0, 0) is the structure sheaf: its unique lattice point
    carries the identically trivial twist, so the count is exactly 1.
    """
    if cls.a < 0:
        return H0Interval(0, 0)
    if cls.a == 0 and cls.b == 0:
        return H0Interval(1, 1)
    degs = surface.bundle.degrees
    curve = surface.curve
    lo = hi = 0
    for k in _compositions(cls.a, surface.rank):
        d = sum(ki * di for ki, di in zip(k, degs)) + cls.b
        iv = h0_interval_curve(curve, d)
        lo += iv.lo
        hi += iv.hi
    return H0Interval(lo, hi)


def _truncated_power_divdiff(knots: Sequence[int], power: int) -> Fraction:
    """Divided difference of t -> max(t, 0)**power over the given knots,
    with repeated knots treated as confluent (derivative) entries."""
    v = sorted(Fraction(x) for x in knots)
    n = len(v)

    def confluent(t: Fraction, k: int) -> Fraction:
        # k-th derivative of max(t,0)**power divided by k!; only orders
        # k < power occur, where the truncated power is still continuous.
        if t <= 0:
            return Fraction(0)
        return comb(power, k) * t ** (power - k)

    table = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = confluent(v[i], 0)
    for span in range(1, n):
        for i in range(n - span):
            j = i + span
            if v[i] == v[j]:
                table[i][j] = confluent(v[i], span)
            else:
                table[i][j] = (table[i + 1][j] - table[i][j - 1]) / (v[j] - v[i])
    return table[0][n - 1]


def volume(surface: RuledSurface, cls: NumClass) -> Fraction:
    """Exact lim r! h^0(m*cls)/m^r; positive exactly on big classes."""
    r = surface.rank
    if cls.a <= 0:
        return Fraction(0)
    knots = [cls.a * d + cls.b for d in surface.bundle.degrees]
    return Fraction(cls.a) ** (r - 1) * _truncated_power_divdiff(knots, r)


def _ladder(m_max: int) -> list[int]:
    ms = []
    m = m_max
    while m >= 8:
        ms.append(m)
        m //= 2
    ms.reverse()
    return ms


def growth_classify(
    surface: RuledSurface, cls: NumClass, m_max: int, mode: str = "volume"
) -> GrowthReport:
    """Classify the growth of the certified lower/upper bounds.

    Samples h0_class_interval on m*cls along a halving ladder down from
    m_max.  BIG_CERTIFIED requires the lower bound at m_max to exceed half
    of the exact asymptote (volume mode, the default) or to witness
    super-(r-1) growth against the previous rung (ladder mode).
    NOT_BIG_CERTIFIED requires the upper bound to stay below the
    (1+g)*(r*m+1)^(r-1) ceiling on every rung.
    """
    if m_max < 8:
        raise ValueError("m_max must be at least 8")
    if mode not in ("volume", "ladder"):
        raise ValueError(f"unknown mode {mode!r}")
    ms = _ladder(m_max)
    samples = tuple((m, h0_class_interval(surface, m * cls)) for m in ms)
    r = surface.rank
    g = surface.curve.genus
    lo_last = samples[-1][1].lo
    fitted = Fraction(factorial(r) * lo_last, m_max**r)

    if mode == "volume":
        vol = volume(surface, cls)
        big_ok = vol > 0 and lo_last > vol * m_max**r / (2 * factorial(r))
    else:
        big_ok = False
        if len(samples) >= 2 and lo_last > 0:
            m_prev, prev = samples[-2]
            big_ok = Fraction(lo_last, m_max**r) >= Fraction(prev.lo, m_prev**r) / 2

    if big_ok:
        verdict = Verdict.BIG_CERTIFIED
    elif all(iv.hi <= (1 + g) * (r * m + 1) ** (r - 1) for m, iv in samples):
        verdict = Verdict.NOT_BIG_CERTIFIED
    else:
        verdict = Verdict.INCONCLUSIVE
    return GrowthReport(samples, verdict, fitted)
