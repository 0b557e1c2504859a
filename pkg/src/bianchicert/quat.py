"""Quaternion algebras (a,b/Q): conjugation, reduced norm/trace, the
matrix embedding into M_2(Q(sqrt(a))), the standard orders for a = -d,
and the passage from norm-one order units to circle-stabilizer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from .circles import stab_form
from .psl2 import Mat2, PslElement
from .quadint import QuadInt, is_squarefree

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class QuatAlgebra:
    """Hilbert symbol parameters: i^2 = a, j^2 = b, ij = -ji = k."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise ValueError("Hilbert symbol parameters must be nonzero")

    def one(self) -> "Quaternion":
        return Quaternion(self, 1, 0, 0, 0)

    def i(self) -> "Quaternion":
        return Quaternion(self, 0, 1, 0, 0)

    def j(self) -> "Quaternion":
        return Quaternion(self, 0, 0, 1, 0)

    def k(self) -> "Quaternion":
        return Quaternion(self, 0, 0, 0, 1)


@dataclass(frozen=True)
class Quaternion:
    """x0 + x1*i + x2*j + x3*k with exact rational coordinates."""

    algebra: QuatAlgebra
    x0: Fraction
    x1: Fraction
    x2: Fraction
    x3: Fraction

    def __post_init__(self) -> None:
        for name in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def _check(self, other: "Quaternion") -> None:
        if self.algebra != other.algebra:
            raise ValueError("mismatched quaternion algebras")

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(self.algebra, self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(self.algebra, self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, -self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other: "Quaternion | int | Fraction") -> "Quaternion":
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return Quaternion(self.algebra, self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
        self._check(other)
        a, b = self.algebra.a, self.algebra.b
        y0, y1, y2, y3 = other.x0, other.x1, other.x2, other.x3
        x0, x1, x2, x3 = self.x0, self.x1, self.x2, self.x3
        return Quaternion(
            self.algebra,
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )

    __rmul__ = __mul__

    def conj(self) -> "Quaternion":
        return Quaternion(self.algebra, self.x0, -self.x1, -self.x2, -self.x3)

    def reduced_norm(self) -> Fraction:
        a, b = self.algebra.a, self.algebra.b
        return (self.x0 ** 2 - a * self.x1 ** 2 - b * self.x2 ** 2
                + a * b * self.x3 ** 2)

    def reduced_trace(self) -> Fraction:
        return 2 * self.x0


def _imaginary_d(alg: QuatAlgebra) -> int:
    a = alg.a
    if a.denominator != 1 or a >= 0 or not is_squarefree(-int(a)):
        raise ValueError(f"embedding requires a = -d with d positive square-free, got a={a}")
    return -int(a)


def rho(x: Quaternion) -> Mat2:
    """The embedding into M_2(Q(sqrt(a))) for a = -d:

        (x0 + x1 sqrt(a),  b (x2 + x3 sqrt(a)))
        (x2 - x3 sqrt(a),  x0 - x1 sqrt(a))

    Entries are QuadRat values over O_d.
    """
    d = _imaginary_d(x.algebra)
    b = x.algebra.b
    return Mat2(
        QuadRat.from_sqrt_parts(d, x.x0, x.x1),
        QuadRat.from_sqrt_parts(d, b * x.x2, b * x.x3),
        QuadRat.from_sqrt_parts(d, x.x2, -x.x3),
        QuadRat.from_sqrt_parts(d, x.x0, -x.x1),
    )


def in_order(x: Quaternion, d: int) -> bool:
    """Membership in the standard order of (-d, D / Q): integer coordinates
    for d = 1, 2 (mod 4); half-integers with x0 = x1, x2 = x3 (mod 2) for
    d = 3 (mod 4)."""
    if _imaginary_d(x.algebra) != d:
        raise ValueError(f"quaternion lives over a={x.algebra.a}, not -{d}")
    coords = (x.x0, x.x1, x.x2, x.x3)
    if d % 4 == 3:
        doubled = [2 * c for c in coords]
        if any(c.denominator != 1 for c in doubled):
            return False
        u0, u1, u2, u3 = (int(c) for c in doubled)
        return (u0 - u1) % 2 == 0 and (u2 - u3) % 2 == 0
    return all(c.denominator == 1 for c in coords)


def order_unit_to_stab(x: Quaternion, d: int, D: int) -> PslElement:
    """Map a norm-one order unit through the embedding to an element of
    Stab_{PSL2(O_d)}(C_D)."""
    if x.algebra.b != D:
        raise ValueError(f"algebra parameter b={x.algebra.b} does not match D={D}")
    if not in_order(x, d):
        raise ValueError(f"{x} is not in the standard order for d={d}")
    if x.reduced_norm() != 1:
        raise ValueError(f"reduced norm is {x.reduced_norm()}, not 1")
    m = rho(x)
    element = PslElement(Mat2(*(e.to_quadint() for e in m.entries())))
    if stab_form(element, D) is None:
        raise AssertionError("order unit did not land in stabilizer form")
    return element


@dataclass(frozen=True)
class QuadRat:
    """Element of Q(sqrt(-d)): (x + y*tau_d)/den in lowest terms."""

    d: int
    x: int
    y: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 1:
            raise ValueError("denominator must be positive")

    @classmethod
    def make(cls, d: int, x: int, y: int, den: int = 1) -> "QuadRat":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            x, y, den = -x, -y, -den
        g = gcd(gcd(abs(x), abs(y)), den)
        return cls(d, x // g, y // g, den // g)

    @classmethod
    def from_quadint(cls, a: QuadInt) -> "QuadRat":
        return cls.make(a.d, a.x, a.y)

    @classmethod
    def from_sqrt_parts(cls, d: int, u: Rational, v: Rational) -> "QuadRat":
        """The value u + v*sqrt(-d) with rational u, v."""
        u, v = Fraction(u), Fraction(v)
        if d % 4 == 3:
            # tau = (1 + sqrt(-d))/2, so u + v*sqrt(-d) = (u - v) + 2v*tau
            xq, yq = u - v, 2 * v
        else:
            xq, yq = u, v
        den = lcm(xq.denominator, yq.denominator)
        return cls.make(d, int(xq * den), int(yq * den), den)

    def _coerce(self, other: "QuadRat | QuadInt | int") -> "QuadRat":
        if isinstance(other, int):
            return QuadRat.make(self.d, other, 0)
        if isinstance(other, QuadInt):
            other = QuadRat.from_quadint(other)
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise ValueError(f"mixed rings: d={self.d} vs d={other.d}")
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "QuadRat | QuadInt | int") -> "QuadRat":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadRat.make(self.d, self.x * o.den + o.x * self.den,
                            self.y * o.den + o.y * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: "QuadRat | QuadInt | int") -> "QuadRat":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "QuadRat | QuadInt | int") -> "QuadRat":
        return (-self) + other

    def __neg__(self) -> "QuadRat":
        return QuadRat(self.d, -self.x, -self.y, self.den)

    def __mul__(self, other: "QuadRat | QuadInt | int") -> "QuadRat":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a = QuadInt(self.d, self.x, self.y) * QuadInt(self.d, o.x, o.y)
        return QuadRat.make(self.d, a.x, a.y, self.den * o.den)

    __rmul__ = __mul__

    def conj(self) -> "QuadRat":
        a = QuadInt(self.d, self.x, self.y).conj()
        return QuadRat(self.d, a.x, a.y, self.den)

    def norm(self) -> Fraction:
        return Fraction(QuadInt(self.d, self.x, self.y).norm(), self.den ** 2)

    def trace(self) -> Fraction:
        return Fraction(QuadInt(self.d, self.x, self.y).trace(), self.den)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_quadint(self) -> QuadInt:
        if self.den != 1:
            raise ValueError(f"{self!r} is not integral")
        return QuadInt(self.d, self.x, self.y)
