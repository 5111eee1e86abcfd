"""Validation and enumeration of admissible multiplicity profiles.

For a g-dimensional principally polarized abelian variety with an order-p
automorphism, the eigenspace multiplicities a(h) on differentials of the
first kind form a nonnegative integer function on G = (Z/pZ)^* with

    a(h) + a(-h) = 2g / (p-1)   for every h,

which requires (p-1) | 2g in the first place.  Such functions are called
admissible; there are (2g/(p-1) + 1)^((p-1)/2) of them, one free choice in
0..2g/(p-1) per pair {h, -h}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclotomic import is_odd_prime
from .errors import InvalidInputError, NotApplicableError
from .groupfun import GFun


@dataclass(frozen=True)
class ProblemInstance:
    """A valid (p, g) pair: p an odd prime, g >= 1, (p-1) | 2g."""

    p: int
    g: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise InvalidInputError(f"p must be an odd prime, got {self.p!r}")
        if not isinstance(self.g, int) or self.g < 1:
            raise InvalidInputError(f"g must be a positive integer, got {self.g!r}")
        if (2 * self.g) % (self.p - 1) != 0:
            raise NotApplicableError(
                f"(p-1) must divide 2g: p-1={self.p - 1} does not divide 2g={2 * self.g}"
            )

    @property
    def half_sum(self) -> int:
        """2g/(p-1): the constant value of a(h) + a(-h)."""
        return 2 * self.g // (self.p - 1)

    @property
    def fixed_point_count(self) -> int:
        """2g/(p-1) + 2: the number of automorphism fixed points on a curve."""
        return self.half_sum + 2


def validate_instance(p, g) -> ProblemInstance:
    """Construct a ProblemInstance, raising InvalidInputError / NotApplicableError."""
    if not isinstance(p, int) or not isinstance(g, int):
        raise InvalidInputError(f"p and g must be integers, got {p!r}, {g!r}")
    return ProblemInstance(p, g)


@dataclass(frozen=True)
class MultiplicityProfile:
    """An admissible eigenvalue-multiplicity function a on G."""

    instance: ProblemInstance
    a: GFun

    def __post_init__(self):
        if self.a.p != self.instance.p:
            raise InvalidInputError(
                f"profile prime {self.a.p} does not match instance prime {self.instance.p}"
            )
        if not _admissible_values(self.a.values, self.instance.half_sum):
            raise InvalidInputError(
                f"not admissible for (p={self.instance.p}, g={self.instance.g}): "
                f"{list(self.a.values)}"
            )
        # sum a = g follows from the pair symmetry; assert it independently
        if sum(self.a.values) != self.instance.g:
            raise InvalidInputError(
                f"profile values sum to {sum(self.a.values)}, expected g={self.instance.g}"
            )

    def value_tuple(self) -> tuple:
        return self.a.values

    def to_json_dict(self) -> dict:
        return {
            "p": self.instance.p,
            "g": self.instance.g,
            "a": list(self.a.values),
        }

    @classmethod
    def from_values(cls, instance: ProblemInstance, values) -> "MultiplicityProfile":
        return cls(instance, GFun(instance.p, values))


def _admissible_values(values, half_sum: int) -> bool:
    n = len(values)
    for i, v in enumerate(values):
        if not isinstance(v, int) or v < 0:
            return False
        if v + values[n - 1 - i] != half_sum:
            return False
    return True


def is_admissible(a: GFun, instance: ProblemInstance) -> bool:
    """True iff a is nonnegative integer valued with a(h) + a(-h) = 2g/(p-1)."""
    if a.p != instance.p:
        raise InvalidInputError(
            f"profile prime {a.p} does not match instance prime {instance.p}"
        )
    return _admissible_values(a.values, instance.half_sum)


def enumerate_admissible(instance: ProblemInstance) -> list:
    """All admissible profiles, in lexicographic order of (a(1), ..., a((p-1)/2)).

    The values on the first half of G are free in 0..2g/(p-1); the mirror
    values are forced by the pair symmetry.
    """
    p = instance.p
    half = (p - 1) // 2
    half_sum = instance.half_sum
    out = []
    for first in product(range(half_sum + 1), repeat=half):
        mirror = tuple(half_sum - first[half - 1 - i] for i in range(half))
        profile = MultiplicityProfile(instance, GFun._trusted(p, first + mirror))
        out.append(profile)
    return out
