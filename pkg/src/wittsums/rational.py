"""The rational function field k(x) over a finite field k.

Provides normalized rational functions, the places of the projective line
(monic irreducible polynomials plus the place at infinity), valuations,
local Laurent expansions, and point/place enumeration with a hard cap on
enumeration size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FiniteField, get_embedding, get_field
from .poly import Poly, factor, irreducibles_of_degree, roots_in_field
from .series import LaurentSeries, eval_poly_at_series

ENUMERATION_CAP = 10**7


class EnumerationCapError(RuntimeError):
    """A requested enumeration would exceed the configured size cap."""


@dataclass(frozen=True)
class FinitePlace:
    """A finite place of P^1/k: a monic irreducible polynomial in x."""

    poly: Poly

    def __post_init__(self):
        if self.poly.is_constant() or self.poly.leading() != 1:
            raise ValueError("a finite place is a monic irreducible of degree >= 1")

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def field(self) -> FiniteField:
        return self.poly.field

    def __repr__(self):
        return f"FinitePlace({self.poly})"


@dataclass(frozen=True)
class InfinitePlace:
    """The place at infinity of P^1/k (degree 1)."""

    field: FiniteField

    degree = 1

    def __repr__(self):
        return "InfinitePlace()"


class RationalFunction:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, _normalized=False):
        field = num.field
        if den is None:
            den = Poly.one(field)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            g = num.gcd(den)
            if not g.is_constant():
                num = num // g
                den = den // g
            lead_inv = field.inv(den.leading())
            num = num.scale(lead_inv)
            den = den.scale(lead_inv)
        self.field = field
        self.num = num
        self.den = den

    # -- constructors

    @classmethod
    def zero(cls, field):
        return cls(Poly.zero(field), Poly.one(field), _normalized=True)

    @classmethod
    def one(cls, field):
        return cls(Poly.one(field), Poly.one(field), _normalized=True)

    @classmethod
    def const(cls, field, c):
        return cls(Poly.const(field, c), Poly.one(field), _normalized=True)

    @classmethod
    def x(cls, field):
        return cls(Poly.x(field), Poly.one(field), _normalized=True)

    @classmethod
    def from_poly(cls, f: Poly):
        return cls(f, Poly.one(f.field), _normalized=True)

    # -- queries

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    # -- arithmetic

    def __add__(self, other):
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RationalFunction":
        return RationalFunction.one(self.field) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        res = RationalFunction.one(self.field)
        base = self
        while n:
            if n & 1:
                res = res * base
            n >>= 1
            if n:
                base = base * base
        return res

    def scale(self, c: int) -> "RationalFunction":
        return RationalFunction(self.num.scale(c), self.den, _normalized=c != 0)

    def map_field(self, emb) -> "RationalFunction":
        """Extend constants along a field embedding."""
        return RationalFunction(
            self.num.map_field(emb), self.den.map_field(emb), _normalized=True
        )

    def eval(self, x: int, big: FiniteField | None = None, emb=None) -> int:
        """Value at a point with coordinate in the base field or an extension.

        Raises ZeroDivisionError at a pole.
        """
        if big is None:
            big, emb = self.field, None
        n = self.num.eval_in(big, emb, x) if emb else self.num.eval(x)
        d = self.den.eval_in(big, emb, x) if emb else self.den.eval(x)
        return big.mul(n, big.inv(d))

    # -- places and valuations

    def valuation_at(self, place) -> int:
        """v_P(f); raises ValueError for the zero function."""
        if self.is_zero():
            raise ValueError("the zero function has no valuation")
        if isinstance(place, InfinitePlace):
            return self.den.degree - self.num.degree
        pi = place.poly
        v = 0
        f = self.num
        while True:
            q, r = f.divmod(pi)
            if not r.is_zero():
                break
            f, v = q, v + 1
        if v:
            return v
        f = self.den
        while True:
            q, r = f.divmod(pi)
            if not r.is_zero():
                break
            f, v = q, v - 1
        return v

    def pole_divisor(self) -> list[tuple]:
        """[(place, pole order)] over all poles, deterministic order."""
        out = []
        for pi, mult in factor(self.den):
            out.append((FinitePlace(pi), mult))
        d = self.num.degree - self.den.degree
        if d > 0:
            out.append((InfinitePlace(self.field), d))
        return out

    def laurent_at(self, place, prec: int) -> LaurentSeries:
        """Expansion in the standard local parameter at the place.

        At a rational place (x - alpha) the parameter is t = x - alpha; at
        infinity it is t = 1/x.  At a place of degree e > 1 constants are
        extended to the residue field F_{q^e} and the expansion is taken at a
        root of the place polynomial, in the parameter t = x - root.
        """
        F = self.field
        if isinstance(place, InfinitePlace):
            # x = 1/t:  f = t^(deg den - deg num) * rev(num)(t) / rev(den)(t)
            rn, rd = self.num.reverse(), self.den.reverse()
            work = prec + max(0, self.num.degree - self.den.degree) + 1
            t = LaurentSeries.t_power(F, 1, work)
            num_s = eval_poly_at_series(rn.coeffs, t).shift(
                self.den.degree - self.num.degree
            )
            den_s = eval_poly_at_series(rd.coeffs, t)
            return (num_s * den_s.inverse()).truncate(prec)
        pi = place.poly
        e = pi.degree
        if e == 1:
            alpha = F.neg(pi.coeffs[0])
            big, emb, root = F, None, alpha
        else:
            big = get_field(F.p, F.m * e)
            emb = get_embedding(F.p, F.m, F.m * e)
            root = min(roots_in_field(pi.map_field(emb)))
        # substitute x = root + t and divide the two polynomial expansions;
        # the guard terms absorb precision lost inverting a denominator that
        # vanishes at the place
        t = LaurentSeries(big, 0, [root, 1], prec + 2 * self.den.degree + 2)
        num_s = eval_poly_at_series(self.num.coeffs, t, emb)
        den_s = eval_poly_at_series(self.den.coeffs, t, emb)
        return (num_s * den_s.inverse()).truncate(prec)

    def __repr__(self):
        return f"RationalFunction(({self.num})/({self.den}))"


def places_up_to_degree(field: FiniteField, dmax: int) -> list:
    """All places of P^1/k of degree <= dmax (infinity included), ordered by
    degree then coefficient code."""
    if field.q**dmax > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"place enumeration size {field.q}^{dmax} exceeds cap {ENUMERATION_CAP}"
        )
    out: list = [InfinitePlace(field)]
    for d in range(1, dmax + 1):
        out.extend(FinitePlace(f) for f in irreducibles_of_degree(field, d))
    return out


def projective_line_points(field: FiniteField, d: int):
    """Points of P^1 over F_{q^d}: affine codes in the extension plus None
    for the point at infinity."""
    if field.q**d > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"point enumeration size {field.q}^{d} exceeds cap {ENUMERATION_CAP}"
        )
    big = field if d == 1 else get_field(field.p, field.m * d)
    return big, [None] + list(range(big.q))


class RationalFunctionField:
    """k(x) as a Witt coefficient ring (elements are RationalFunction)."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.char = field.p

    def zero(self):
        return RationalFunction.zero(self.field)

    def one(self):
        return RationalFunction.one(self.field)

    def from_int(self, n: int):
        return RationalFunction.const(self.field, n % self.field.p)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def eq(self, a, b) -> bool:
        return a == b

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, n):
        return a**n

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and self.field == other.field

    def __hash__(self):
        return hash(("RationalFunctionField", self.field))
