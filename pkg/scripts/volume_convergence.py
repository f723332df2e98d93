#!/usr/bin/env python3
"""Print the convergence of the exact lattice-sum ratios to the volume.

For a chosen surface and class, tabulates r! * lo(mD) / m^r along a
doubling ladder next to the exact limit, showing the O(1/m) envelope.

Usage: python3 scripts/volume_convergence.py [genus d1 d2 [a b]]
"""
import sys
from fractions import Fraction
from math import factorial

from ruledsurf import (
    Curve,
    NumClass,
    RuledSurface,
    SplitBundle,
    canonical_class,
    h0_class_interval,
    volume,
)


def run(genus: int, d1: int, d2: int, a=None, b=None) -> None:
    surface = RuledSurface(Curve(genus), SplitBundle((d1, d2)))
    cls = NumClass(a, b) if a is not None else -canonical_class(surface)
    r = surface.rank
    vol = volume(surface, cls)
    print(f"surface: genus {genus}, degrees {surface.bundle.degrees}")
    print(f"class: {cls}  volume: {vol}")
    print("m\tlo\tratio\terror\tm*error")
    m = 8
    while m <= 128:
        lo = h0_class_interval(surface, m * cls).lo
        ratio = Fraction(factorial(r) * lo, m**r)
        err = abs(vol - ratio)
        print(f"{m}\t{lo}\t{ratio}\t{err}\t{m * err}")
        m *= 2


if __name__ == "__main__":
    args = [int(x) for x in sys.argv[1:]]
    if not args:
        args = [1, 1, 0]
    run(*args)
