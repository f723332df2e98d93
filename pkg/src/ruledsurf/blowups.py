"""Iterated blow-ups of a ruled surface and the bigness certificate.

The numerical lattice of the blown-up surface is Z*xi + Z*f + Z*e_1 +
... + Z*e_n with each exceptional class of self-intersection -1,
orthogonal to everything else.  The canonical class gains +e_i at each
step.

A blow-up scenario records an effective "budget" class D on the base and,
for each blow-up, the author's assertion that the center lies on the
strict transform of D.  If -K - D is big on the base and every center
honors the assertion, the anticanonical class upstairs decomposes as
(pullback of the big class) + (pullback(D) - sum e_i), the second summand
effective, so -K stays big.  The certificate is sufficient only: a false
result means "not certified", never "not big".
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .surfaces import NumClass, RuledSurface, big_test, canonical_class, intersect, pseff_test


@dataclass(frozen=True)
class ExtClass:
    """Class a*xi + b*f + sum(exc_i * e_i) on a blown-up surface."""

    a: int
    b: int
    exc: tuple[int, ...] = ()

    def __add__(self, other: "ExtClass") -> "ExtClass":
        n = max(len(self.exc), len(other.exc))
        e1 = self.exc + (0,) * (n - len(self.exc))
        e2 = other.exc + (0,) * (n - len(other.exc))
        return ExtClass(self.a + other.a, self.b + other.b,
                        tuple(x + y for x, y in zip(e1, e2)))

    def __neg__(self) -> "ExtClass":
        return ExtClass(-self.a, -self.b, tuple(-x for x in self.exc))

    def __sub__(self, other: "ExtClass") -> "ExtClass":
        return self + (-other)

    def __str__(self) -> str:
        parts = [f"{self.a}*xi", f"{self.b}*f"]
        parts += [f"{c}*e{i + 1}" for i, c in enumerate(self.exc) if c != 0]
        return " + ".join(parts)


@dataclass(frozen=True)
class BlownUpSurface:
    """Rank-2 ruled surface after n successive point blow-ups."""

    base: RuledSurface
    n: int = 0

    def __post_init__(self) -> None:
        if self.base.rank != 2:
            raise ValueError("blow-ups supported over rank-2 bases only")
        if self.n < 0:
            raise ValueError("n must be non-negative")

    def canonical_class(self) -> ExtClass:
        k = canonical_class(self.base)
        return ExtClass(k.a, k.b, (1,) * self.n)

    def pullback(self, cls: NumClass) -> ExtClass:
        return ExtClass(cls.a, cls.b, (0,) * self.n)

    def exceptional(self, i: int) -> ExtClass:
        if not 1 <= i <= self.n:
            raise ValueError(f"exceptional index {i} out of range 1..{self.n}")
        return ExtClass(0, 0, tuple(1 if j == i - 1 else 0 for j in range(self.n)))


def blow_up(surface: BlownUpSurface) -> BlownUpSurface:
    """Blow up one more point: the lattice extends orthogonally by a new
    (-1)-class and K gains the new exceptional."""
    return BlownUpSurface(surface.base, surface.n + 1)


def check_class(surface: BlownUpSurface, cls: ExtClass, other: ExtClass) -> int:
    """Symmetric bilinear pairing in the extended lattice."""
    base_part = intersect(surface.base, [NumClass(cls.a, cls.b), NumClass(other.a, other.b)])
    n = max(len(cls.exc), len(other.exc))
    e1 = cls.exc + (0,) * (n - len(cls.exc))
    e2 = other.exc + (0,) * (n - len(other.exc))
    return base_part - sum(x * y for x, y in zip(e1, e2))


@dataclass(frozen=True)
class BlowupStep:
    on_strict_transform: bool


@dataclass(frozen=True)
class BlowupScenario:
    """A base surface, an effective budget class D, and a chain of blow-up
    steps with incidence flags.  Rejected at construction if the budget is
    not pseudoeffective on the base."""

    base: RuledSurface
    budget_class: NumClass
    steps: tuple[BlowupStep, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not pseff_test(self.base, self.budget_class):
            raise ValueError("budget class is not pseudoeffective on the base")


@dataclass(frozen=True)
class BigAnticanonicalCertificate:
    certified: bool
    big_part: NumClass
    big_part_is_big: bool
    effective_part: ExtClass
    steps_on_strict_transform: bool
    n_steps: int


def certify_big_anticanonical(scenario: BlowupScenario) -> BigAnticanonicalCertificate:
    """Certify -K big upstairs via -K(X~) = f*(-K - D) + (f*D - sum e_i)."""
    base = scenario.base
    d = scenario.budget_class
    big_part = -canonical_class(base) - d
    big_ok = big_test(base, big_part)
    steps_ok = all(step.on_strict_transform for step in scenario.steps)
    n = len(scenario.steps)
    effective_part = ExtClass(d.a, d.b, (-1,) * n)
    return BigAnticanonicalCertificate(
        certified=big_ok and steps_ok,
        big_part=big_part,
        big_part_is_big=big_ok,
        effective_part=effective_part,
        steps_on_strict_transform=steps_ok,
        n_steps=n,
    )
