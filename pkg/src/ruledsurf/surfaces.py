"""Projective bundles over a curve and their numerical divisor classes.

Classes live in the lattice Z*xi + Z*f, where xi is the tautological class
of O_X(1) and f the fiber class.  The intersection relations are
xi^r = deg E, xi^(r-1).f = 1, and any product with two or more fiber
factors vanishes.

Big/pseudoeffective tests use the slope criterion: a*xi + b*f is big iff
a > 0 and b + a*mu_max(E) > 0.  For the anticanonical class of a rank-2
surface this reads deg L - deg M > 2g - 2, and for O(n) twisted by a
degree-c pullback it reads n*deg L + c > 0 on P(L + O).  The nef test is
the dual statement with mu_min and is only supported in rank 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .bundles import Curve, SplitBundle, hn_data


@dataclass(frozen=True)
class NumClass:
    """Numerical class a*xi + b*f."""

    a: int
    b: int

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "NumClass":
        return NumClass(-self.a, -self.b)

    def __rmul__(self, t: int) -> "NumClass":
        return NumClass(t * self.a, t * self.b)

    __mul__ = __rmul__

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class RuledSurface:
    """P_C(E) for a split bundle E of rank >= 2 (a surface when r = 2,
    a higher projective bundle otherwise)."""

    curve: Curve
    bundle: SplitBundle

    def __post_init__(self) -> None:
        if self.bundle.rank < 2:
            raise ValueError("projective bundle needs rank >= 2")

    @property
    def rank(self) -> int:
        return self.bundle.rank


def canonical_class(surface: RuledSurface) -> NumClass:
    """K_X = -r*xi + pi^*(K_C + det E)."""
    return NumClass(
        -surface.rank,
        surface.curve.canonical_degree + surface.bundle.det_degree,
    )


def intersect(surface: RuledSurface, classes: list[NumClass]) -> int:
    """Top intersection number of r numerical classes."""
    r = surface.rank
    if len(classes) != r:
        raise ValueError(f"expected {r} classes, got {len(classes)}")
    e = surface.bundle.det_degree
    all_a = prod(c.a for c in classes)
    cross = sum(
        classes[j].b * prod(classes[i].a for i in range(r) if i != j)
        for j in range(r)
    )
    return e * all_a + cross


def big_test(surface: RuledSurface, cls: NumClass) -> bool:
    """a*xi + b*f is big iff a > 0 and b + a*mu_max(E) > 0."""
    if cls.a <= 0:
        return False
    return cls.b + cls.a * hn_data(surface.bundle).mu_max > 0


def pseff_test(surface: RuledSurface, cls: NumClass) -> bool:
    """Closure of the big cone: a >= 0 and b + a*mu_max(E) >= 0."""
    if cls.a < 0:
        return False
    return cls.b + cls.a * hn_data(surface.bundle).mu_max >= 0


def nef_test(surface: RuledSurface, cls: NumClass) -> bool:
    """Rank 2 only: nef iff a >= 0 and b + a*mu_min(E) >= 0.

    Equivalently the class pairs non-negatively with the fiber and with
    the negative section xi - d_1*f.
    """
    if surface.rank != 2:
        raise ValueError("nef test unsupported for rank >= 3")
    if cls.a < 0:
        return False
    return cls.b + cls.a * hn_data(surface.bundle).mu_min >= 0
