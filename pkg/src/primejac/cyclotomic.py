"""Exact arithmetic in the p-th cyclotomic field Q(zeta_p) for odd primes p.

Scalars are exact rationals: plain ``int`` where the value is integral,
``fractions.Fraction`` otherwise (both are ``numbers.Rational``, and Python
guarantees consistent equality and hashing across the two).

Elements of Q(zeta_p) are stored in coordinates over the basis
{zeta, zeta^2, ..., zeta^{p-1}}.  The power zeta^0 = 1 is *not* a basis
vector; it is eliminated through the relation

    1 = -(zeta + zeta^2 + ... + zeta^{p-1}),

so every element has exactly one coordinate vector and equality is a
coordinate comparison.  This basis makes complex conjugation an index
permutation (coordinate v moves to p-v) and keeps the coefficients of
1/(1-zeta^u) directly readable.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def is_odd_prime(n) -> bool:
    """Trial-division primality check, restricted to odd primes."""
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p) -> int:
    from .errors import InvalidInputError

    if not is_odd_prime(p):
        raise InvalidInputError(f"p must be an odd prime, got {p!r}")
    return p


def as_rational(x):
    """Normalize x to the canonical scalar: int when integral, else Fraction."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, numbers.Rational):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x) -> str:
    """Render a rational as the canonical 'num/den' string (den always shown)."""
    x = as_rational(x)
    if isinstance(x, int):
        return f"{x}/1"
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str):
    """Parse 'num/den' (or a bare integer string) into a canonical rational."""
    text = s.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return as_rational(Fraction(int(num), int(den)))
    return int(text)


class CyclotomicNumber:
    """An element of Q(zeta_p) in canonical coordinates over {zeta^1..zeta^{p-1}}.

    Immutable; arithmetic returns new objects.  Mixed arithmetic with ints
    and Fractions treats them as rational scalars.
    """

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords):
        require_odd_prime(p)
        vals = tuple(as_rational(c) for c in coords)
        if len(vals) != p - 1:
            from .errors import InvalidInputError

            raise InvalidInputError(
                f"need {p - 1} coordinates for p={p}, got {len(vals)}"
            )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coords", vals)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, p: int, value) -> "CyclotomicNumber":
        """The rational number `value` as an element of Q(zeta_p).

        Uses 1 = -sum(zeta^v), so the coordinates are all -value.
        """
        q = as_rational(value)
        return cls(p, (-q,) * (p - 1))

    @classmethod
    def zero(cls, p: int) -> "CyclotomicNumber":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> "CyclotomicNumber":
        return cls.from_rational(p, 1)

    # -- queries -----------------------------------------------------------

    def coord(self, v: int):
        """Coefficient of zeta^v, for v = 1..p-1."""
        if not 1 <= v <= self.p - 1:
            raise IndexError(f"exponent {v} outside 1..{self.p - 1}")
        return self.coords[v - 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        """True iff the element lies in Q, i.e. all coordinates coincide."""
        first = self.coords[0]
        return all(c == first for c in self.coords[1:])

    def rational_value(self):
        """The element as a rational scalar; raises if it is not in Q."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return as_rational(-self.coords[0])

    # -- arithmetic ---------------------------------------------------------

    def _check_same_field(self, other: "CyclotomicNumber"):
        if self.p != other.p:
            from .errors import InvalidInputError

            raise InvalidInputError(
                f"mixed cyclotomic fields: p={self.p} vs p={other.p}"
            )

    def __add__(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_same_field(other)
            return CyclotomicNumber(
                self.p, tuple(a + b for a, b in zip(self.coords, other.coords))
            )
        if isinstance(other, numbers.Rational):
            return self + CyclotomicNumber.from_rational(self.p, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_same_field(other)
            return CyclotomicNumber(
                self.p, tuple(a - b for a, b in zip(self.coords, other.coords))
            )
        if isinstance(other, numbers.Rational):
            return self - CyclotomicNumber.from_rational(self.p, other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Rational):
            return CyclotomicNumber.from_rational(self.p, other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            q = as_rational(other)
            return CyclotomicNumber(self.p, tuple(a * q for a in self.coords))
        if isinstance(other, CyclotomicNumber):
            self._check_same_field(other)
            p = self.p
            # exponent addition mod p into slots 0..p-1, then eliminate the
            # zeta^0 slot through 1 = -sum(zeta^v)
            acc = [0] * p
            for v, a in enumerate(self.coords, start=1):
                if a == 0:
                    continue
                for w, b in enumerate(other.coords, start=1):
                    if b == 0:
                        continue
                    acc[(v + w) % p] += a * b
            unit = acc[0]
            return CyclotomicNumber(p, tuple(acc[v] - unit for v in range(1, p)))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            q = as_rational(other)
            if q == 0:
                raise ZeroDivisionError("division of cyclotomic number by zero")
            return CyclotomicNumber(
                self.p, tuple(Fraction(a, 1) / q for a in self.coords)
            )
        return NotImplemented

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation zeta -> zeta^{-1}: coordinate v moves to p-v."""
        p = self.p
        return CyclotomicNumber(p, tuple(self.coords[p - 1 - v] for v in range(1, p)))

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.p == other.p and self.coords == other.coords
        if isinstance(other, numbers.Rational):
            return self.is_rational() and self.rational_value() == as_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coords))

    def __repr__(self):
        terms = []
        for v, c in enumerate(self.coords, start=1):
            if c != 0:
                terms.append(f"{c}*z^{v}")
        body = " + ".join(terms) if terms else "0"
        return f"CyclotomicNumber(p={self.p}: {body})"

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"p": self.p, "coords": [format_rational(c) for c in self.coords]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "CyclotomicNumber":
        return cls(data["p"], [parse_rational(s) for s in data["coords"]])


def zeta_pow(p: int, k: int) -> CyclotomicNumber:
    """zeta_p^k in canonical coordinates (k may be any integer)."""
    require_odd_prime(p)
    r = k % p
    if r == 0:
        return CyclotomicNumber.one(p)
    coords = [0] * (p - 1)
    coords[r - 1] = 1
    return CyclotomicNumber(p, coords)


@lru_cache(maxsize=None)
def inv_one_minus_zeta(p: int, u: int) -> CyclotomicNumber:
    """The exact inverse of (1 - zeta_p^u) for a unit u mod p.

    Expands as -(sum_h h * zeta^{u h}) / p: multiplying out telescopes the sum
    sum_h h (zeta^{uh} - zeta^{u(h+1)}) down to -p, so the product with
    (1 - zeta^u) is exactly 1.
    """
    require_odd_prime(p)
    if u % p == 0:
        from .errors import InvalidInputError

        raise InvalidInputError("1 - zeta^0 = 0 is not invertible")
    coords = [Fraction(0)] * (p - 1)
    for h in range(1, p):
        coords[(u * h) % p - 1] = Fraction(-h, p)
    return CyclotomicNumber(p, coords)
