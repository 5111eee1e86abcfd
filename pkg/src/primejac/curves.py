"""Superelliptic curve models realizing a branch profile.

Given a branch profile b, the plane curve

    y^p = f(x),   f(x) = prod_h f_h(x)^{j(h^{-1})},

with f_h monic of degree b(h), squarefree and pairwise coprime, carries the
order-p automorphism (x, y) -> (x, zeta_p y).  Its smooth projective model
is a degree-p cyclic cover of the line, unramified at infinity because
deg f = sum_h b(h) j(h^{-1}) is divisible by p. Each root alpha of f_h lifts
to a single fixed point P with tangent eigenvalue zeta^{j(h)} and
ord_P(y) = j(h^{-1}).

The model is symbolic: only the branch data (alpha, class, exponent) and the
derived counts are stored, because every identity verified downstream
depends on nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import MultiplicityProfile, ProblemInstance
from .cyclotomic import as_rational, format_rational
from .errors import InternalInvariantError, InvalidInputError
from .groupfun import GFun, UnitModP
from .realizability import BranchProfile


@dataclass(frozen=True)
class BranchPoint:
    """A root alpha of f_h: branch point of the cover in class h, appearing
    in f with exponent j(h^{-1})."""

    alpha: object  # exact rational (int or Fraction)
    class_h: UnitModP
    exponent: int

    def to_json_dict(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "h": self.class_h.residue,
            "e": self.exponent,
        }


@dataclass(frozen=True)
class CurveModel:
    """Symbolic model of y^p = f(x) with its branch and count data."""

    instance: ProblemInstance
    branch_points: tuple
    f_degree: int
    genus: int
    fixed_point_count: int

    def __post_init__(self):
        p = self.instance.p
        alphas = [pt.alpha for pt in self.branch_points]
        if len(set(alphas)) != len(alphas):
            raise InvalidInputError(f"branch points must be distinct: {alphas}")
        for pt in self.branch_points:
            if pt.exponent % p == 0:
                raise InvalidInputError(
                    f"exponent {pt.exponent} divisible by p={p} at alpha={pt.alpha}"
                )
            if pt.exponent != pt.class_h.inverse().residue:
                raise InvalidInputError(
                    f"exponent {pt.exponent} is not j(h^-1) for h={pt.class_h.residue}"
                )
        if self.f_degree != sum(pt.exponent for pt in self.branch_points):
            raise InvalidInputError("f_degree does not match the exponent sum")
        if self.f_degree % p != 0:
            raise InvalidInputError(
                f"deg f = {self.f_degree} not divisible by p={p}: cover ramified at infinity"
            )
        s = len(self.branch_points)
        if self.fixed_point_count != s:
            raise InvalidInputError("fixed point count must equal the branch point count")
        if 2 * self.genus != (s - 2) * (p - 1):
            raise InvalidInputError(
                f"genus {self.genus} does not match ((S-2)(p-1))/2 for S={s}"
            )

    def class_counts(self) -> dict:
        """Number of branch points per class residue."""
        counts = {h: 0 for h in range(1, self.instance.p)}
        for pt in self.branch_points:
            counts[pt.class_h.residue] += 1
        return counts

    def equation_string(self) -> str:
        """Plain-text equation y^p = prod (x - alpha_i)^(e_i)."""
        factors = []
        for pt in self.branch_points:
            alpha = as_rational(pt.alpha)
            if alpha == 0:
                base = "x"
            elif alpha < 0:
                base = f"(x + {-alpha})"
            else:
                base = f"(x - {alpha})"
            factors.append(base if pt.exponent == 1 else f"{base}^{pt.exponent}")
        rhs = " * ".join(factors) if factors else "1"
        return f"y^{self.instance.p} = {rhs}"

    def to_json_dict(self) -> dict:
        return {
            "p": self.instance.p,
            "g": self.instance.g,
            "branch": [pt.to_json_dict() for pt in self.branch_points],
            "f_degree": self.f_degree,
            "genus": self.genus,
            "fixed_points": self.fixed_point_count,
        }


@dataclass(frozen=True)
class FixedPointRecord:
    """A fixed point of the automorphism: tangent eigenvalue zeta^epsilon_exponent,
    with ord_P(y) = ord_y."""

    point: BranchPoint
    epsilon_exponent: int
    ord_y: int

    def __post_init__(self):
        p = self.point.class_h.p
        if (self.epsilon_exponent * self.ord_y) % p != 1:
            raise InvalidInputError(
                f"epsilon exponent {self.epsilon_exponent} and ord_y {self.ord_y} "
                f"are not inverse mod {p}"
            )


def build_curve(b: BranchProfile, alphas=None) -> CurveModel:
    """Materialize the superelliptic model for a branch profile.

    Branch points default to 1, 2, ..., S handed out to classes in ascending
    residue order, b(h) points per class; any list of S distinct rationals
    is accepted instead.
    """
    inst = b.instance
    p = inst.p
    s = inst.fixed_point_count
    if alphas is None:
        alpha_list = list(range(1, s + 1))
    else:
        alpha_list = [as_rational(x) for x in alphas]
        if len(alpha_list) != s:
            raise InvalidInputError(
                f"need {s} branch points, got {len(alpha_list)}"
            )
        if len(set(alpha_list)) != len(alpha_list):
            raise InvalidInputError(f"branch points must be distinct: {alpha_list}")
    points = []
    idx = 0
    for h in range(1, p):
        count = b.b.values[h - 1]
        if count == 0:
            continue
        unit = UnitModP(p, h)
        exponent = unit.inverse().residue
        for _ in range(count):
            points.append(
                BranchPoint(alpha=alpha_list[idx], class_h=unit, exponent=exponent)
            )
            idx += 1
    f_degree = sum(pt.exponent for pt in points)
    return CurveModel(
        instance=inst,
        branch_points=tuple(points),
        f_degree=f_degree,
        genus=inst.g,
        fixed_point_count=s,
    )


def fixed_points(curve: CurveModel) -> list:
    """One fixed-point record per branch point: eigenvalue exponent j(h),
    ord_P(y) = j(h^{-1})."""
    out = []
    for pt in curve.branch_points:
        out.append(
            FixedPointRecord(
                point=pt,
                epsilon_exponent=pt.class_h.residue,
                ord_y=pt.exponent,
            )
        )
    return out


def differential_multiplicities(curve: CurveModel) -> MultiplicityProfile:
    """Eigenspace dimensions of the automorphism on holomorphic differentials,
    counted from the branch data alone:

        a(k) = -1 + sum_P frac(-k * e_P / p),

    where e_P is the exponent of the branch point and frac is the fractional
    part, computed exactly as ((-k e_P) mod p)/p.  Independent of the
    convolution route.
    """
    inst = curve.instance
    p = inst.p
    exponents = [pt.exponent for pt in curve.branch_points]
    values = []
    for k in range(1, p):
        total = 0
        for e in exponents:
            total += (-k * e) % p
        if total % p:
            raise InternalInvariantError(
                f"non-integral eigenspace dimension at k={k} despite p | deg f"
            )
        values.append(total // p - 1)
    return MultiplicityProfile(inst, GFun(p, values))
