"""Decide which admissible multiplicity profiles come from Jacobians.

If a g-dimensional ppav with an order-p automorphism is the Jacobian of a
curve, the automorphism lifts to the curve and its fixed-point structure
produces a branch profile: a nonnegative integer function b on G with

    sum_h b(h) = 2g/(p-1) + 2,
    sum_h b(h) j(h^{-1})  divisible by p,

related to the multiplicity profile by

    a(v) = (1/p) * sum_u b(u) j(u^{-1}(-v)) - 1.

A profile with no such b therefore cannot be the profile of a Jacobian;
a profile with one is realized explicitly by a superelliptic curve (see
``curves``).  Two independent solvers are provided: a brute-force search
over all candidate tuples and an exact linear-algebra route, and they must
agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import _kernels
from .admissible import MultiplicityProfile, ProblemInstance, enumerate_admissible
from .errors import InternalInvariantError, InvalidInputError
from .groupfun import (
    GFun,
    _inverse_residues,
    affine_solution_forms,
    conv_by_j_matrix,
    odd_part,
)


@dataclass(frozen=True)
class BranchProfile:
    """Fixed-point counts per tangent character: b(h) = number of fixed
    points with local eigenvalue zeta^{j(h)}."""

    instance: ProblemInstance
    b: GFun

    def __post_init__(self):
        inst = self.instance
        if self.b.p != inst.p:
            raise InvalidInputError(
                f"branch profile prime {self.b.p} does not match instance prime {inst.p}"
            )
        vals = self.b.values
        if not all(isinstance(v, int) and v >= 0 for v in vals):
            raise InvalidInputError(f"branch profile must be nonnegative integers: {vals}")
        total = sum(vals)
        if total != inst.fixed_point_count:
            raise InvalidInputError(
                f"branch profile sums to {total}, expected 2g/(p-1)+2 = {inst.fixed_point_count}"
            )
        if _degree_sum(self.b) % inst.p != 0:
            raise InvalidInputError(
                "sum_h b(h) * j(h^{-1}) = "
                f"{_degree_sum(self.b)} is not divisible by p = {inst.p}"
            )

    def value_tuple(self) -> tuple:
        return self.b.values

    def to_json_dict(self) -> dict:
        return {
            "p": self.instance.p,
            "g": self.instance.g,
            "b": list(self.b.values),
        }

    @classmethod
    def from_values(cls, instance: ProblemInstance, values) -> "BranchProfile":
        return cls(instance, GFun(instance.p, values))


@dataclass(frozen=True)
class RealizabilityVerdict:
    """A profile together with every branch profile realizing it."""

    profile: MultiplicityProfile
    witnesses: tuple
    is_jacobian_compatible: bool

    def __post_init__(self):
        if self.is_jacobian_compatible != bool(self.witnesses):
            raise InvalidInputError(
                "is_jacobian_compatible must mirror witness existence"
            )
        for w in self.witnesses:
            if a_from_b(w) != self.profile:
                raise InternalInvariantError(
                    f"witness {w.value_tuple()} does not induce profile "
                    f"{self.profile.value_tuple()}"
                )

    def to_json_dict(self) -> dict:
        return {
            "a": list(self.profile.a.values),
            "jacobian_compatible": self.is_jacobian_compatible,
            "witnesses": [list(w.b.values) for w in self.witnesses],
        }


def _degree_sum(b: GFun) -> int:
    inv = _inverse_residues(b.p)
    return sum(v * i for v, i in zip(b.values, inv))


def a_from_b(b: BranchProfile) -> MultiplicityProfile:
    """The multiplicity profile induced by a branch profile:
    a(v) = (1/p) sum_u b(u) j(u^{-1}(-v)) - 1.

    Each inner sum is a positive multiple of p (divisibility at one point
    propagates to all points), which forces integrality and a(v) >= 0.
    """
    inst = b.instance
    p = inst.p
    vals = b.b.values
    inv = _inverse_residues(p)
    out = []
    for v in range(1, p):
        total = 0
        for u in range(1, p):
            bu = vals[u - 1]
            if bu:
                total += bu * ((inv[u - 1] * (p - v)) % p)
        if total % p:
            raise InternalInvariantError(
                f"sum_u b(u) j(u^{{-1}}({-v})) = {total} is not divisible by p={p}; "
                "mod-p divisibility failed to propagate"
            )
        out.append(total // p - 1)
    return MultiplicityProfile(inst, GFun(p, out))


def brute_force_b(a: MultiplicityProfile) -> list:
    """Independent witness oracle: enumerate every nonnegative tuple with
    sum 2g/(p-1)+2, keep those passing the divisibility constraint whose
    induced profile equals a.  Lexicographic order."""
    inst = a.instance
    tuples = _kernels.matching_branch_tuples(
        inst.p, inst.fixed_point_count, a.a.values
    )
    return [BranchProfile(inst, GFun(inst.p, t)) for t in tuples]


def solve_b(a: MultiplicityProfile) -> list:
    """All branch profiles inducing a, via exact linear algebra.

    The linear system sum_u j(u^{-1}(-v)) b(u) = p (a(v)+1) is solved
    exactly (fraction-free elimination); the integer solutions are then the
    lattice points of the affine solution set inside the box [0, S]^(p-1),
    where S = 2g/(p-1)+2 bounds every coordinate because the system forces
    sum b = S.  Free coordinates are scanned over 0..S and the pivot
    coordinates checked for integrality and nonnegativity.  Returns exactly
    the brute-force result, in the same lexicographic order.
    """
    inst = a.instance
    p = inst.p
    n = p - 1
    s_total = inst.fixed_point_count
    base = conv_by_j_matrix(p)
    # row v of the system is row (-v) of the convolution-by-j matrix
    matrix = [base[(p - v) - 1] for v in range(1, p)]
    rhs = [p * (av + 1) for av in a.a.values]
    solved = affine_solution_forms(matrix, rhs)
    if solved is None:
        return []
    free_cols, forms = solved
    # integer-scale the affine forms so the scan stays in integer arithmetic
    denom = 1
    for form in forms:
        for c in form:
            denom = lcm(denom, c.denominator)
    scaled = [[int(c * denom) for c in form] for form in forms]
    nf = len(free_cols)
    solutions = []
    assignment = [0] * nf

    def scan(k: int):
        if k == nf:
            candidate = [0] * n
            for i in range(n):
                row = scaled[i]
                val = row[0]
                for idx in range(nf):
                    coef = row[idx + 1]
                    if coef:
                        val += coef * assignment[idx]
                if val % denom or val < 0:
                    return
                candidate[i] = val // denom
            if sum(candidate) == s_total:
                solutions.append(tuple(candidate))
            return
        for value in range(s_total + 1):
            assignment[k] = value
            scan(k + 1)

    scan(0)
    solutions.sort()
    return [BranchProfile(inst, GFun(p, t)) for t in solutions]


def classify(instance: ProblemInstance) -> list:
    """One verdict per admissible profile, in enumeration order, with
    witnesses from the linear-algebra solver."""
    out = []
    for profile in enumerate_admissible(instance):
        witnesses = tuple(solve_b(profile))
        out.append(
            RealizabilityVerdict(
                profile=profile,
                witnesses=witnesses,
                is_jacobian_compatible=bool(witnesses),
            )
        )
    return out


def odd_uniqueness_check(a: MultiplicityProfile) -> bool:
    """True iff every branch profile inducing a has the same odd part.

    Vacuously true with fewer than two witnesses.  This is forced by the
    kernel structure of convolution by j (the kernel is even), so False
    would indicate a defect.
    """
    witnesses = solve_b(a)
    if len(witnesses) < 2:
        return True
    parts = {odd_part(w.b) for w in witnesses}
    return len(parts) == 1


def divisibility_propagates(c: GFun) -> bool:
    """Whether sum_h c(h) j(h^{-1}) is divisible by p, for integer-valued c.

    The same congruence tested at any other point v (with j(v h^{-1})) gives
    the same answer, because j(v h^{-1}) = k_v j(h^{-1}) mod p for a unit
    k_v mod p.  The function recomputes all p-1 point tests and raises
    InternalInvariantError if they ever disagree.
    """
    if not c.is_integer_valued():
        raise InvalidInputError(f"divisibility test needs integer values: {c!r}")
    p = c.p
    vals = c.values
    inv = _inverse_residues(p)
    verdicts = []
    for v in range(1, p):
        total = 0
        for u in range(1, p):
            cu = vals[u - 1]
            if cu:
                total += cu * ((v * inv[u - 1]) % p)
        verdicts.append(total % p == 0)
    at_one = verdicts[0]
    if any(vd != at_one for vd in verdicts):
        raise InternalInvariantError(
            f"mod-{p} divisibility differs across points for c={list(vals)}: {verdicts}"
        )
    return at_one
