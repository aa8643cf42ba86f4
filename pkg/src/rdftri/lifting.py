"""Two-level lifting values ``base + eps * (formal positive infinitesimal)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class TwoLevel:
    """An element ``base + ε·eps`` of the ordered ring Q[ε], ε > 0 infinitesimal.

    Comparison is lexicographic on ``(base, eps)``, which is exactly the order
    for sufficiently small positive ε.
    """

    base: Fraction = Fraction(0)
    eps: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "eps", Fraction(self.eps))

    def __add__(self, other):
        other = as_two_level(other)
        return TwoLevel(self.base + other.base, self.eps + other.eps)

    __radd__ = __add__

    def __neg__(self):
        return TwoLevel(-self.base, -self.eps)

    def __sub__(self, other):
        return self + (-as_two_level(other))

    def scale(self, factor) -> "TwoLevel":
        return TwoLevel(self.base * factor, self.eps * factor)

    def sign(self) -> int:
        if self.base:
            return 1 if self.base > 0 else -1
        if self.eps:
            return 1 if self.eps > 0 else -1
        return 0

    def __str__(self):
        if not self.eps:
            return str(self.base)
        return f"{self.base}+{self.eps}*eps"


def as_two_level(value) -> TwoLevel:
    if isinstance(value, TwoLevel):
        return value
    return TwoLevel(Fraction(value), Fraction(0))


class TwoLevelLifting:
    """Per-vertex heights ``base[v] + ε·eps[v]``."""

    __slots__ = ("base", "eps")

    def __init__(self, base, eps=None):
        self.base = tuple(Fraction(x) for x in base)
        self.eps = tuple(Fraction(x) for x in eps) if eps is not None else (Fraction(0),) * len(self.base)
        if len(self.eps) != len(self.base):
            raise ValueError("base and eps channels differ in length")

    def __len__(self):
        return len(self.base)

    def __getitem__(self, v) -> TwoLevel:
        return TwoLevel(self.base[v], self.eps[v])

    def __eq__(self, other):
        return isinstance(other, TwoLevelLifting) and self.base == other.base and self.eps == other.eps

    def __repr__(self):
        return f"TwoLevelLifting(base={[str(x) for x in self.base]}, eps={[str(x) for x in self.eps]})"

    @property
    def single_level(self) -> bool:
        return not any(self.eps)

    def integer_channels(self) -> tuple[list[int], list[int]]:
        """Both channels scaled by positive integers so that all entries are integral."""
        from .linalg import lcm_denominator

        lb = lcm_denominator(self.base)
        le = lcm_denominator(self.eps)
        return [int(x * lb) for x in self.base], [int(x * le) for x in self.eps]
