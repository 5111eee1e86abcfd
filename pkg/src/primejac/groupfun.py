"""The unit group G = (Z/pZ)^*, exact rational functions on it, convolution,
and exact linear algebra over the convolution-by-j operator.

Functions on G are dense: a ``GFun`` stores the p-1 values f(1), ..., f(p-1)
indexed by residue.  The distinguished functions are

    j(v)  = v                    (the integer representative 1..p-1)
    j0(v) = v - p/2              (the antisymmetric normalization of j)

Convolution is normalized by 1/(p-1).  The operator f -> f * j is captured
by an exact integer matrix; its right null space consists precisely of the
even, mean-zero functions and has dimension (p-3)/2, which is the structural
reason the odd part of a branch profile is determined by the multiplicity
profile it induces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import as_rational, format_rational, parse_rational, require_odd_prime
from .errors import InvalidInputError


@dataclass(frozen=True)
class UnitModP:
    """An element of (Z/pZ)^*, stored as its representative in 1..p-1."""

    p: int
    residue: int

    def __post_init__(self):
        require_odd_prime(self.p)
        if not 1 <= self.residue <= self.p - 1:
            raise InvalidInputError(
                f"residue {self.residue} outside 1..{self.p - 1} for p={self.p}"
            )

    def __mul__(self, other: "UnitModP") -> "UnitModP":
        if self.p != other.p:
            raise InvalidInputError(f"mixed moduli: {self.p} vs {other.p}")
        return UnitModP(self.p, (self.residue * other.residue) % self.p)

    def inverse(self) -> "UnitModP":
        return UnitModP(self.p, pow(self.residue, -1, self.p))

    def __neg__(self) -> "UnitModP":
        return UnitModP(self.p, self.p - self.residue)

    def __int__(self) -> int:
        return self.residue


def _ratio(num, den: int):
    """Exact num/den as a canonical rational (int when integral)."""
    if isinstance(num, int):
        q, r = divmod(num, den)
        return q if r == 0 else Fraction(num, den)
    return as_rational(Fraction(num, den))


class GFun:
    """An exact-rational-valued function on G = (Z/pZ)^*."""

    __slots__ = ("p", "values")

    def __init__(self, p: int, values):
        require_odd_prime(p)
        vals = tuple(as_rational(v) for v in values)
        if len(vals) != p - 1:
            raise InvalidInputError(f"need {p - 1} values for p={p}, got {len(vals)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "values", vals)

    @classmethod
    def _trusted(cls, p: int, values: tuple) -> "GFun":
        # internal fast path: values already canonical
        self = object.__new__(cls)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "values", values)
        return self

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("GFun is immutable")

    def value_at(self, h):
        """f(h) for h a UnitModP or any integer not divisible by p."""
        if isinstance(h, UnitModP):
            if h.p != self.p:
                raise InvalidInputError(f"mixed moduli: {h.p} vs {self.p}")
            return self.values[h.residue - 1]
        r = h % self.p
        if r == 0:
            raise InvalidInputError(f"{h} is not a unit mod {self.p}")
        return self.values[r - 1]

    def is_integer_valued(self) -> bool:
        return all(isinstance(v, int) for v in self.values)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def sum(self):
        return as_rational(sum(self.values, start=Fraction(0)))

    # -- pointwise algebra ---------------------------------------------------

    def _check_same_group(self, other: "GFun"):
        if self.p != other.p:
            raise InvalidInputError(f"mixed groups: p={self.p} vs p={other.p}")

    def __add__(self, other: "GFun") -> "GFun":
        self._check_same_group(other)
        return GFun(self.p, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "GFun") -> "GFun":
        self._check_same_group(other)
        return GFun(self.p, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "GFun":
        return GFun._trusted(self.p, tuple(-a for a in self.values))

    def __mul__(self, scalar) -> "GFun":
        q = as_rational(scalar)
        return GFun(self.p, tuple(a * q for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GFun):
            return self.p == other.p and self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.values))

    def __repr__(self):
        return f"GFun(p={self.p}, values={list(self.values)})"

    def to_json_dict(self) -> dict:
        return {"p": self.p, "values": [format_rational(v) for v in self.values]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GFun":
        return cls(data["p"], [parse_rational(s) for s in data["values"]])


def j_fun(p: int) -> GFun:
    """j(v) = v, the integer representative in 1..p-1.

    Satisfies j(h1 h2) = j(h1) j(h2) mod p because reduction mod p is a
    ring homomorphism.
    """
    require_odd_prime(p)
    return GFun._trusted(p, tuple(range(1, p)))


def j0_fun(p: int) -> GFun:
    """j0 = j - p/2.  Antisymmetric: j0(-u) = -j0(u), since u + (p-u) = p."""
    require_odd_prime(p)
    return GFun._trusted(p, tuple(Fraction(2 * v - p, 2) for v in range(1, p)))


@lru_cache(maxsize=None)
def _inverse_residues(p: int) -> tuple:
    return tuple(pow(u, -1, p) for u in range(1, p))


@lru_cache(maxsize=None)
def _conv_index_table(p: int) -> tuple:
    """table[u-1][h-1] = (u^{-1} h) mod p, the index pattern of convolution."""
    inv = _inverse_residues(p)
    return tuple(
        tuple((inv[u - 1] * h) % p for h in range(1, p)) for u in range(1, p)
    )


def _denominator_cleared(values):
    """(integer vector, D) with values[i] = ints[i] / D.  D = 1 returns the
    original tuple unchanged (canonical values are ints in that case)."""
    d = 1
    for v in values:
        if isinstance(v, Fraction):
            d = lcm(d, v.denominator)
    if d == 1:
        return values, 1
    return tuple(int(v * d) for v in values), d


def convolve(f1: GFun, f2: GFun) -> GFun:
    """(f1 * f2)(h) = (1/(p-1)) sum_u f1(u) f2(u^{-1} h), computed exactly.

    Denominators are pulled out first so the double loop runs on integers.
    """
    f1._check_same_group(f2)
    p = f1.p
    table = _conv_index_table(p)
    a, da = _denominator_cleared(f1.values)
    b, db = _denominator_cleared(f2.values)
    den = (p - 1) * da * db
    out = []
    for h in range(1, p):
        s = 0
        for u in range(1, p):
            au = a[u - 1]
            if au:
                s += au * b[table[u - 1][h - 1] - 1]
        out.append(_ratio(s, den))
    return GFun._trusted(p, tuple(out))


def negate_arg(f: GFun) -> GFun:
    """g(v) = f(-v); with residues this reverses the value sequence."""
    return GFun._trusted(f.p, tuple(reversed(f.values)))


def odd_part(f: GFun) -> GFun:
    """odd(f)(v) = (f(v) - f(-v)) / 2."""
    rev = f.values[::-1]
    return GFun(f.p, tuple(_half(a - b) for a, b in zip(f.values, rev)))


def even_part(f: GFun) -> GFun:
    """even(f)(v) = (f(v) + f(-v)) / 2."""
    rev = f.values[::-1]
    return GFun(f.p, tuple(_half(a + b) for a, b in zip(f.values, rev)))


def _half(x):
    if isinstance(x, int):
        return x // 2 if x % 2 == 0 else Fraction(x, 2)
    return as_rational(x / 2)


def conv_by_j_matrix(p: int) -> list:
    """The exact integer matrix of the unnormalized convolution with j.

    Entry [v-1][u-1] is j(u^{-1} v), so that for any f on G,
    (p-1) * (f * j)(v) = sum_u M[v-1][u-1] f(u).
    """
    require_odd_prime(p)
    inv = _inverse_residues(p)
    return [[(inv[u - 1] * v) % p for u in range(1, p)] for v in range(1, p)]


# -- exact linear algebra ----------------------------------------------------


def _integerize_rows(matrix, rhs=None):
    """Scale each row (and its right-hand side entry) to integers."""
    rows = []
    out_rhs = [] if rhs is not None else None
    for i, row in enumerate(matrix):
        vals = [as_rational(x) for x in row]
        if rhs is not None:
            vals.append(as_rational(rhs[i]))
        scale = 1
        for x in vals:
            if isinstance(x, Fraction):
                scale = lcm(scale, x.denominator)
        ints = [int(x * scale) for x in vals]
        if rhs is not None:
            out_rhs.append(ints.pop())
        rows.append(ints)
    return rows, out_rhs


def _bareiss_echelon(rows, rhs=None):
    """In-place fraction-free (Bareiss) row echelon reduction.

    Pivots are chosen deterministically: columns in ascending order, first
    row with a nonzero entry.  Intermediate values stay integral; returns
    the list of pivot columns.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivot_cols = []
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            if rhs is not None:
                rhs[r], rhs[pivot_row] = rhs[pivot_row], rhs[r]
        piv = rows[r][c]
        for i in range(r + 1, n_rows):
            fi = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for jj in range(c, n_cols):
                row_i[jj] = (row_i[jj] * piv - fi * row_r[jj]) // prev
            if rhs is not None:
                rhs[i] = (rhs[i] * piv - fi * rhs[r]) // prev
        prev = piv
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    return pivot_cols


def _primitive_integer_vector(vec):
    """Scale a rational vector to a primitive integer vector, first nonzero
    entry positive."""
    scale = 1
    for x in vec:
        if isinstance(x, Fraction):
            scale = lcm(scale, x.denominator)
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


def kernel_basis(matrix) -> list:
    """A basis of the right null space of a square rational matrix.

    Fraction-free elimination followed by exact back substitution; one basis
    vector per free column, ordered by ascending free column index, each
    scaled to a primitive integer vector with positive leading entry.
    """
    rows, _ = _integerize_rows(matrix)
    if not rows:
        return []
    pivot_cols = _bareiss_echelon(rows)
    n_cols = len(rows[0])
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for r in range(len(pivot_cols) - 1, -1, -1):
            c = pivot_cols[r]
            s = Fraction(0)
            row = rows[r]
            for jj in range(c + 1, n_cols):
                if row[jj] and x[jj]:
                    s += row[jj] * x[jj]
            x[c] = -s / row[c]
        basis.append(_primitive_integer_vector(x))
    return basis


def affine_solution_forms(matrix, rhs):
    """Exact solution structure of the linear system matrix @ x = rhs.

    Returns None when the system is inconsistent.  Otherwise returns
    (free_cols, forms) where forms[i] is a Fraction vector of length
    len(free_cols) + 1 expressing

        x[i] = forms[i][0] + sum_k forms[i][k+1] * x[free_cols[k]].
    """
    rows, rvals = _integerize_rows(matrix, rhs)
    if not rows:
        return [], []
    pivot_cols = _bareiss_echelon(rows, rvals)
    n_cols = len(rows[0])
    rank = len(pivot_cols)
    for i in range(rank, len(rows)):
        if rvals[i] != 0:
            return None
    free_cols = [c for c in range(n_cols) if c not in set(pivot_cols)]
    nf = len(free_cols)
    forms = [None] * n_cols
    for k, f in enumerate(free_cols):
        unit = [Fraction(0)] * (nf + 1)
        unit[k + 1] = Fraction(1)
        forms[f] = unit
    for r in range(rank - 1, -1, -1):
        c = pivot_cols[r]
        acc = [Fraction(rvals[r])] + [Fraction(0)] * nf
        row = rows[r]
        for jj in range(c + 1, n_cols):
            coef = row[jj]
            if coef:
                fj = forms[jj]
                for idx in range(nf + 1):
                    if fj[idx]:
                        acc[idx] -= coef * fj[idx]
        piv = row[c]
        forms[c] = [x / piv for x in acc]
    return free_cols, forms
