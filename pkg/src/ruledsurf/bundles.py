"""Curves, split vector bundles, slopes, and Frobenius twists.

Everything here is pure integer / exact rational arithmetic.  A curve is
known to the rest of the library only through its genus and the
characteristic of the ground field; a bundle only through the multiset of
degrees of its line-bundle summands.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Curve:
    """Smooth projective curve of the given genus over a field of the given
    characteristic (0 or a prime)."""

    genus: int
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError("characteristic must be 0 or a prime")

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True)
class SplitBundle:
    """Direct sum of line bundles, recorded by their degrees.

    The degree list is canonicalized to non-increasing order on
    construction, so two bundles with the same summands compare equal.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(sorted(self.degrees, reverse=True))
        if not degs:
            raise ValueError("a bundle needs at least one summand")
        if not all(isinstance(d, int) for d in degs):
            raise ValueError("summand degrees must be integers")
        object.__setattr__(self, "degrees", degs)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def det_degree(self) -> int:
        return sum(self.degrees)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.det_degree, self.rank)


@dataclass(frozen=True)
class HNData:
    """Harder-Narasimhan data of a split bundle: (slope, multiplicity)
    blocks in strictly decreasing slope order."""

    blocks: tuple[tuple[Fraction, int], ...]

    @property
    def mu_max(self) -> Fraction:
        return self.blocks[0][0]

    @property
    def mu_min(self) -> Fraction:
        return self.blocks[-1][0]

    @property
    def rank(self) -> int:
        return sum(mult for _, mult in self.blocks)

    @property
    def semistable(self) -> bool:
        return len(self.blocks) == 1


def hn_data(bundle: SplitBundle) -> HNData:
    """Group the summands by degree; for a split bundle the HN filtration
    is the filtration by degree-graded pieces."""
    blocks: list[tuple[Fraction, int]] = []
    for d in bundle.degrees:
        slope = Fraction(d)
        if blocks and blocks[-1][0] == slope:
            blocks[-1] = (slope, blocks[-1][1] + 1)
        else:
            blocks.append((slope, 1))
    return HNData(tuple(blocks))


def symmetric_power_stats(bundle: SplitBundle, n: int) -> tuple[int, int, Fraction]:
    """Rank, degree, and slope of the n-th symmetric power.

    rank S^n(E) = C(r-1+n, n) and deg S^n(E) = C(r-1+n, r) * deg E;
    consequently mu(S^n E) = n * mu(E).
    """
    if n < 0:
        raise ValueError("symmetric power exponent must be non-negative")
    r = bundle.rank
    rank = comb(r - 1 + n, n)
    degree = comb(r - 1 + n, r) * bundle.det_degree
    return rank, degree, n * bundle.slope


def instability_certificate(
    curve: Curve, bundle: SplitBundle, m: int
) -> tuple[Fraction, Fraction, bool]:
    """Slope comparison destabilizing S^{rm}(E) whenever h^0(-mK) > 0.

    A non-zero section of -mK_X yields a subsheaf of S^{rm}(E) of slope
    m(2g-2+deg E), while S^{rm}(E) itself has slope m*deg E; on a curve of
    genus >= 2 the former strictly exceeds the latter.
    """
    if m <= 0:
        raise ValueError("m must be positive")
    sub = Fraction(m * (curve.canonical_degree + bundle.det_degree))
    ambient = Fraction(m * bundle.det_degree)
    return sub, ambient, sub > ambient


def frobenius_pullback(curve: Curve, bundle: SplitBundle, e: int) -> SplitBundle:
    """Pull back along e iterations of Frobenius: degrees scale by p^e."""
    if e < 0:
        raise ValueError("e must be non-negative")
    if e == 0:
        return bundle
    if curve.characteristic == 0:
        raise ValueError("Frobenius undefined in characteristic zero")
    scale = curve.characteristic ** e
    return SplitBundle(tuple(scale * d for d in bundle.degrees))


def min_destabilizing_e(curve: Curve, bundle: SplitBundle) -> Optional[int]:
    """Least e >= 0 with p^e * (d_1 - d_2) > 2g - 2 for a rank-2 bundle.

    In characteristic 0 only e = 0 is tried.  Returns None when no such e
    exists (equal degrees, or characteristic 0 with gap <= 2g - 2).
    """
    if bundle.rank != 2:
        raise ValueError("min_destabilizing_e requires a rank-2 bundle")
    gap = bundle.degrees[0] - bundle.degrees[1]
    if gap == 0:
        return None
    bound = curve.canonical_degree
    if gap > bound:
        return 0
    if curve.characteristic == 0:
        return None
    p = curve.characteristic
    e = 0
    scaled = gap
    while scaled <= bound:
        e += 1
        scaled *= p
    return e
