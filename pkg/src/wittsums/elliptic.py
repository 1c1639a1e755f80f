"""Elliptic function fields: smooth Weierstrass curves over finite fields.

Functions on the curve are represented as u(x) + v(x)*y with u, v rational
functions of x; arithmetic uses y^2 = B(x) - A(x)*y where A = a1*x + a3 and
B = x^3 + a2*x^2 + a4*x + a6.  Local expansions use the parameter x/y at
the point at infinity and x - x0 (or y - y0 at ramified points) at affine
points.
"""

from __future__ import annotations

from functools import lru_cache

from .fields import FiniteField, get_embedding, get_field
from .poly import Poly, factor, roots_in_field
from .rational import ENUMERATION_CAP, EnumerationCapError, RationalFunction
from .series import LaurentSeries, PrecisionError, eval_poly_at_series

MAX_SERIES_PREC = 1 << 16


@lru_cache(maxsize=None)
def _artin_schreier_table(field: FiniteField):
    """code of z^2+z -> z, for a char-2 field (one solution per image)."""
    t = {}
    for z in field.elements():
        t.setdefault(field.add(field.mul(z, z), z), z)
    return t


def field_sqrt(field: FiniteField, a: int) -> int | None:
    """A square root of a, or None if a is a non-square (any characteristic)."""
    if a == 0:
        return 0
    if field.p == 2:
        return field.pow(a, field.q // 2)  # squaring is bijective
    if field.log[a] % 2:
        return None
    return field.exp[field.log[a] // 2]


def solve_artin_schreier_quadratic(field: FiniteField, u: int) -> int | None:
    """A solution z of z^2 + z = u over a char-2 field, or None."""
    if field.p != 2:
        raise ValueError("only defined in characteristic 2")
    return _artin_schreier_table(field).get(u)


class EllipticCurve:
    """y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6, smooth, over F_q."""

    def __init__(self, field: FiniteField, a1: int, a2: int, a3: int, a4: int, a6: int):
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6
        if self.discriminant() == 0:
            raise ValueError("singular Weierstrass model (discriminant = 0)")

    def _n(self, n: int, a: int) -> int:
        """n*a for a small integer n."""
        F = self.field
        acc = 0
        for _ in range(n % F.p):
            acc = F.add(acc, a)
        return acc

    def discriminant(self) -> int:
        F = self.field
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = F.add(F.mul(a1, a1), self._n(4, a2))
        b4 = F.add(self._n(2, a4), F.mul(a1, a3))
        b6 = F.add(F.mul(a3, a3), self._n(4, a6))
        b8 = F.add(
            F.add(F.mul(F.mul(a1, a1), a6), self._n(4, F.mul(a2, a6))),
            F.add(
                F.sub(F.mul(a2, F.mul(a3, a3)), F.mul(a1, F.mul(a3, a4))),
                F.neg(F.mul(a4, a4)),
            ),
        )
        t1 = F.neg(F.mul(F.mul(b2, b2), b8))
        t2 = F.neg(self._n(8, F.pow(b4, 3)))
        t3 = F.neg(self._n(27, F.mul(b6, b6)))
        t4 = self._n(9, F.mul(b2, F.mul(b4, b6)))
        return F.add(F.add(t1, t2), F.add(t3, t4))

    def map_field(self, emb) -> "EllipticCurve":
        """The same model with constants extended along a field embedding."""
        return EllipticCurve(
            emb.big, emb(self.a1), emb(self.a2), emb(self.a3), emb(self.a4), emb(self.a6)
        )

    # A(x) = a1*x + a3,  B(x) = x^3 + a2*x^2 + a4*x + a6 (base-field polys)
    def poly_A(self) -> Poly:
        return Poly(self.field, (self.a3, self.a1))

    def poly_B(self) -> Poly:
        return Poly(self.field, (self.a6, self.a4, self.a2, 1))

    def __eq__(self, other):
        return isinstance(other, EllipticCurve) and (
            self.field,
            self.a1,
            self.a2,
            self.a3,
            self.a4,
            self.a6,
        ) == (other.field, other.a1, other.a2, other.a3, other.a4, other.a6)

    def __hash__(self):
        return hash((self.field, self.a1, self.a2, self.a3, self.a4, self.a6))

    def __repr__(self):
        return (
            f"EllipticCurve(F_{self.field.q}; a1={self.a1}, a2={self.a2}, "
            f"a3={self.a3}, a4={self.a4}, a6={self.a6})"
        )

    # -- points ---------------------------------------------------------

    def ys_above(self, big: FiniteField, emb, x0: int) -> list[int]:
        """All y in `big` with (x0, y) on the curve; emb embeds constants."""
        e = emb if emb else (lambda c: c)
        a1, a2, a3, a4, a6 = (e(c) for c in (self.a1, self.a2, self.a3, self.a4, self.a6))
        a = big.add(big.mul(a1, x0), a3)  # A(x0)
        c = big.add(
            big.add(big.pow(x0, 3), big.mul(a2, big.mul(x0, x0))),
            big.add(big.mul(a4, x0), a6),
        )  # B(x0)
        # y^2 + a*y - c = 0
        if big.p == 2:
            if a == 0:
                return [field_sqrt(big, c)]
            z = solve_artin_schreier_quadratic(big, big.mul(c, big.inv(big.mul(a, a))))
            if z is None:
                return []
            y = big.mul(a, z)
            return sorted({y, big.add(y, a)})
        # odd characteristic: complete the square, (2y + a)^2 = a^2 + 4c
        disc = big.add(big.mul(a, a), self._n_in(big, 4, c))
        s = field_sqrt(big, disc)
        if s is None:
            return []
        inv2 = big.inv(big.from_int(2))
        ys = {big.mul(big.sub(s, a), inv2), big.mul(big.sub(big.neg(s), a), inv2)}
        return sorted(ys)

    @staticmethod
    def _n_in(big: FiniteField, n: int, a: int) -> int:
        acc = 0
        for _ in range(n % big.p):
            acc = big.add(acc, a)
        return acc

    def affine_points(self, d: int = 1):
        """(big field, embedding, list of affine (x, y) codes over F_{q^d})."""
        F = self.field
        if F.q**d > ENUMERATION_CAP:
            raise EnumerationCapError(
                f"point enumeration size {F.q}^{d} exceeds cap {ENUMERATION_CAP}"
            )
        if d == 1:
            big, emb = F, None
        else:
            big = get_field(F.p, F.m * d)
            emb = get_embedding(F.p, F.m, F.m * d)
        pts = []
        for x0 in big.elements():
            for y0 in self.ys_above(big, emb, x0):
                pts.append((x0, y0))
        return big, emb, pts

    def count_points(self, d: int = 1) -> int:
        """#E(F_{q^d}) including the point at infinity."""
        return len(self.affine_points(d)[2]) + 1

    def on_curve(self, big: FiniteField, emb, x0: int, y0: int) -> bool:
        return y0 in self.ys_above(big, emb, x0)

    # -- places ---------------------------------------------------------

    def origin(self) -> "OriginPlace":
        return OriginPlace(self)

    def places_above(self, pi: Poly) -> list["AffinePlace"]:
        """The places of the curve lying over a monic irreducible pi(x)."""
        F = self.field
        e = pi.degree
        out = []
        for ext in (e, 2 * e):
            if ext == e:
                if e == 1:
                    big, emb = F, None
                else:
                    big = get_field(F.p, F.m * e)
                    emb = get_embedding(F.p, F.m, F.m * e)
                pol = pi.map_field(emb) if emb else pi
                roots = roots_in_field(pol)
                x0 = min(roots)
                ys = self.ys_above(big, emb, x0)
                if ys:
                    for y0 in ys:
                        out.append(AffinePlace.from_point(self, big, emb, x0, y0))
                    return out
            else:
                # inert: the two y's above each root live in F_{q^(2e)}
                big = get_field(F.p, F.m * ext)
                emb = get_embedding(F.p, F.m, F.m * ext)
                x0 = min(roots_in_field(pi.map_field(emb)))
                ys = self.ys_above(big, emb, x0)
                out.append(AffinePlace.from_point(self, big, emb, x0, min(ys)))
                return out
        raise AssertionError("unreachable")

    def places_up_to_degree(self, dmax: int) -> list:
        """All places of the curve of degree <= dmax, origin first."""
        F = self.field
        if F.q**dmax > ENUMERATION_CAP:
            raise EnumerationCapError(
                f"place enumeration size {F.q}^{dmax} exceeds cap {ENUMERATION_CAP}"
            )
        out: list = [OriginPlace(self)]
        seen = set()
        for d in range(1, dmax + 1):
            big, emb, pts = self.affine_points(d)
            for x0, y0 in pts:
                pl = AffinePlace.from_point(self, big, emb, x0, y0)
                if pl.degree == d and pl not in seen:
                    seen.add(pl)
                    out.append(pl)
        return out


class OriginPlace:
    """The point at infinity of a Weierstrass model (always rational)."""

    __slots__ = ("curve",)

    degree = 1

    def __init__(self, curve: EllipticCurve):
        self.curve = curve

    def __eq__(self, other):
        return isinstance(other, OriginPlace) and self.curve == other.curve

    def __hash__(self):
        return hash(("OriginPlace", self.curve))

    def __repr__(self):
        return "OriginPlace()"


class AffinePlace:
    """A closed affine point: a Frobenius orbit of geometric points.

    Coordinates live in F_{q^e} for e the field extension holding the orbit;
    the place degree is the orbit size.
    """

    __slots__ = ("curve", "ext_degree", "orbit", "big", "emb")

    def __init__(self, curve, ext_degree, orbit, big, emb):
        self.curve = curve
        self.ext_degree = ext_degree
        self.orbit = orbit  # sorted tuple of (x, y) codes in `big`
        self.big = big
        self.emb = emb

    @classmethod
    def from_point(cls, curve: EllipticCurve, big: FiniteField, emb, x0: int, y0: int):
        q = curve.field.q
        orbit = set()
        pt = (x0, y0)
        while pt not in orbit:
            orbit.add(pt)
            pt = (big.pow(pt[0], q), big.pow(pt[1], q))
        ext = big.m // curve.field.m
        return cls(curve, ext, tuple(sorted(orbit)), big, emb)

    @property
    def degree(self) -> int:
        return len(self.orbit)

    @property
    def representative(self):
        return self.orbit[0]

    def __eq__(self, other):
        return (
            isinstance(other, AffinePlace)
            and self.curve == other.curve
            and self.ext_degree == other.ext_degree
            and self.orbit == other.orbit
        )

    def __hash__(self):
        return hash(("AffinePlace", self.curve, self.ext_degree, self.orbit))

    def __repr__(self):
        return f"AffinePlace(ext={self.ext_degree}, rep={self.orbit[0]})"


# -- local expansions ---------------------------------------------------


@lru_cache(maxsize=None)
def _origin_xy_series(curve: EllipticCurve, prec: int):
    """Expansions of (x, y) at the origin in the parameter t = x/y.

    Solves w + a1*t*w + a3*w^2 = t^3 + a2*t^2*w + a4*t*w^2 + a6*w^3 for
    w = 1/y by fixed-point iteration, then x = t/w, y = 1/w.
    """
    F = curve.field
    wp = prec + 7  # w = 1/y has valuation 3; inversion costs 2*3 terms
    t = LaurentSeries.t_power(F, 1, wp)
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    w = t**3
    for _ in range(wp):
        w = (
            t**3
            - (t * w).scale(a1)
            - (w * w).scale(a3)
            + (t * t * w).scale(a2)
            + (t * w * w).scale(a4)
            + (w * w * w).scale(a6)
        ).truncate(wp)
    x = (t * w.inverse()).truncate(prec)
    y = w.inverse().truncate(prec)
    return x, y


def _newton_y_series(curve, big, emb, x_s, y0, prec):
    """Solve G(x_s, y) = 0 for a series y with constant term y0 by Newton."""
    e = emb if emb else (lambda c: c)
    A = eval_poly_at_series([e(c) for c in curve.poly_A().coeffs], x_s)
    B = eval_poly_at_series([e(c) for c in curve.poly_B().coeffs], x_s)
    y = LaurentSeries.const(big, y0, 1)
    known = 1
    while known < prec:
        known = min(2 * known, prec)
        y = LaurentSeries(big, y.val, y.coeffs, known)
        Ak, Bk = A.truncate(known), B.truncate(known)
        g = y * y + Ak * y - Bk
        gy = y + y + Ak
        y = (y - g * gy.inverse()).truncate(known)
    return y


@lru_cache(maxsize=None)
def _affine_xy_series(place: AffinePlace, prec: int):
    """Expansions of (x, y) at an affine place in its standard parameter.

    Uses t = x - x0 when the point is unramified over the x-line, else
    t = y - y0.
    """
    curve = place.curve
    big, emb = place.big, place.emb
    e = emb if emb else (lambda c: c)
    x0, y0 = place.representative
    a1, a3 = e(curve.a1), e(curve.a3)
    gy = big.add(
        big.add(y0, y0), big.add(big.mul(a1, x0), a3)
    )  # dG/dy = 2y + a1*x + a3
    if gy != 0:
        x_s = LaurentSeries(big, 0, [x0, 1], prec)
        y_s = _newton_y_series(curve, big, emb, x_s, y0, prec)
        return x_s, y_s
    # ramified over x: parameter t = y - y0, solve for x by Newton
    a2, a4 = e(curve.a2), e(curve.a4)
    y_s = LaurentSeries(big, 0, [y0, 1], prec)
    # dG/dx = a1*y - (3x^2 + 2*a2*x + a4)
    dgx0 = big.sub(
        big.mul(a1, y0),
        big.add(
            EllipticCurve._n_in(big, 3, big.mul(x0, x0)),
            big.add(EllipticCurve._n_in(big, 2, big.mul(a2, x0)), a4),
        ),
    )
    if dgx0 == 0:
        raise ArithmeticError("singular point on a smooth model")
    A = curve.poly_A().map_field(emb) if emb else curve.poly_A()
    B = curve.poly_B().map_field(emb) if emb else curve.poly_B()
    dA = A.derivative()
    dB = B.derivative()
    x_s = LaurentSeries.const(big, x0, 1)
    known = 1
    while known < prec:
        known = min(2 * known, prec)
        x_s = LaurentSeries(big, x_s.val, x_s.coeffs, known)
        yk = y_s.truncate(known)
        As = eval_poly_at_series(A.coeffs, x_s)
        Bs = eval_poly_at_series(B.coeffs, x_s)
        g = yk * yk + As * yk - Bs
        dAs = eval_poly_at_series(dA.coeffs, x_s)
        dBs = eval_poly_at_series(dB.coeffs, x_s)
        gx = dAs * yk - dBs
        x_s = (x_s - g * gx.inverse()).truncate(known)
    return x_s, y_s


class EllipticFunction:
    """u(x) + v(x)*y as a function on an elliptic curve."""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve: EllipticCurve, u: RationalFunction, v: RationalFunction):
        self.curve = curve
        self.u = u
        self.v = v

    # -- constructors

    @classmethod
    def zero(cls, curve):
        F = curve.field
        return cls(curve, RationalFunction.zero(F), RationalFunction.zero(F))

    @classmethod
    def one(cls, curve):
        F = curve.field
        return cls(curve, RationalFunction.one(F), RationalFunction.zero(F))

    @classmethod
    def const(cls, curve, c):
        F = curve.field
        return cls(curve, RationalFunction.const(F, c), RationalFunction.zero(F))

    @classmethod
    def x(cls, curve):
        F = curve.field
        return cls(curve, RationalFunction.x(F), RationalFunction.zero(F))

    @classmethod
    def y(cls, curve):
        F = curve.field
        return cls(curve, RationalFunction.zero(F), RationalFunction.one(F))

    @classmethod
    def from_rational(cls, curve, u: RationalFunction):
        return cls(curve, u, RationalFunction.zero(curve.field))

    # -- queries

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def __eq__(self, other):
        if not isinstance(other, EllipticFunction):
            return NotImplemented
        return self.curve == other.curve and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.curve, self.u, self.v))

    # -- arithmetic (y^2 = B - A*y)

    def _rat(self, f: Poly) -> RationalFunction:
        return RationalFunction.from_poly(f)

    def __add__(self, other):
        return EllipticFunction(self.curve, self.u + other.u, self.v + other.v)

    def __neg__(self):
        return EllipticFunction(self.curve, -self.u, -self.v)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        A = self._rat(self.curve.poly_A())
        B = self._rat(self.curve.poly_B())
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        uu = u1 * u2 + v1 * v2 * B
        vv = u1 * v2 + u2 * v1 - v1 * v2 * A
        return EllipticFunction(self.curve, uu, vv)

    def conjugate(self) -> "EllipticFunction":
        """Image under y -> -y - A, the hyperelliptic involution."""
        A = self._rat(self.curve.poly_A())
        return EllipticFunction(self.curve, self.u - self.v * A, -self.v)

    def norm(self) -> RationalFunction:
        """f * conjugate(f) = u^2 - u*v*A - v^2*B, a function of x alone."""
        A = self._rat(self.curve.poly_A())
        B = self._rat(self.curve.poly_B())
        return self.u * self.u - self.u * self.v * A - self.v * self.v * B

    def inverse(self) -> "EllipticFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero function")
        n = self.norm()
        conj = self.conjugate()
        return EllipticFunction(self.curve, conj.u / n, conj.v / n)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        res = EllipticFunction.one(self.curve)
        base = self
        while n:
            if n & 1:
                res = res * base
            n >>= 1
            if n:
                base = base * base
        return res

    def scale(self, c: int) -> "EllipticFunction":
        return EllipticFunction(self.curve, self.u.scale(c), self.v.scale(c))

    def map_field(self, emb) -> "EllipticFunction":
        """Extend constants along a field embedding (base change of the curve)."""
        return EllipticFunction(
            self.curve.map_field(emb), self.u.map_field(emb), self.v.map_field(emb)
        )

    # -- evaluation and expansion

    def eval_at_point(self, big: FiniteField, emb, x0: int, y0: int) -> int:
        """Value at an affine point; raises ZeroDivisionError at poles."""
        uval = self.u.eval(x0, big, emb) if emb else self.u.eval(x0)
        vval = self.v.eval(x0, big, emb) if emb else self.v.eval(x0)
        return big.add(uval, big.mul(vval, y0))

    def _eval_rat_at_series(self, f: RationalFunction, x_s, emb):
        num = eval_poly_at_series(f.num.coeffs, x_s, emb)
        den = eval_poly_at_series(f.den.coeffs, x_s, emb)
        return num * den.inverse()

    def laurent_at(self, place, prec: int) -> LaurentSeries:
        """Expansion in the standard parameter at a place of the curve."""
        if isinstance(place, OriginPlace):
            if place.curve != self.curve:
                raise ValueError("place belongs to a different curve")
            # generous working precision: x, y have poles of order 2, 3
            deg = max(
                self.u.den.degree + self.u.num.degree,
                self.v.den.degree + self.v.num.degree + 2,
            )
            work = prec + 6 * (deg + 2)
            x_s, y_s = _origin_xy_series(self.curve, work)
            big, emb = self.curve.field, None
        else:
            if place.curve != self.curve:
                raise ValueError("place belongs to a different curve")
            work = prec + 2 * (self.u.den.degree + self.v.den.degree + 2)
            x_s, y_s = _affine_xy_series(place, work)
            big, emb = place.big, place.emb
        out = self._eval_rat_at_series(self.u, x_s, emb)
        if not self.v.is_zero():
            out = out + self._eval_rat_at_series(self.v, x_s, emb) * y_s
        return out.truncate(prec) if out.prec >= prec else out

    def valuation_at(self, place) -> int:
        if self.is_zero():
            raise ValueError("the zero function has no valuation")
        prec = 16
        while prec <= MAX_SERIES_PREC:
            s = self.laurent_at(place, prec)
            if not s.is_zero():
                return s.valuation()
            prec *= 2
        raise PrecisionError("valuation did not resolve within the precision cap")

    def pole_divisor(self) -> list[tuple]:
        """[(place, pole order)] over all poles, deterministic order."""
        out = []
        seen_pis = {}
        for f in (self.u, self.v):
            for pi, _ in factor(f.den):
                seen_pis.setdefault((pi.degree, pi.coeffs), pi)
        for _, pi in sorted(seen_pis.items()):
            for pl in self.curve.places_above(pi):
                v = self.valuation_at(pl)
                if v < 0:
                    out.append((pl, -v))
        v = self.valuation_at(OriginPlace(self.curve))
        if v < 0:
            out.append((OriginPlace(self.curve), -v))
        return out

    def __repr__(self):
        return f"EllipticFunction(({self.u}) + ({self.v})*y)"


class EllipticFunctionField:
    """The function field of a curve as a Witt coefficient ring."""

    def __init__(self, curve: EllipticCurve):
        self.curve = curve
        self.char = curve.field.p

    def zero(self):
        return EllipticFunction.zero(self.curve)

    def one(self):
        return EllipticFunction.one(self.curve)

    def from_int(self, n: int):
        return EllipticFunction.const(self.curve, n % self.curve.field.p)

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
        return isinstance(other, EllipticFunctionField) and self.curve == other.curve

    def __hash__(self):
        return hash(("EllipticFunctionField", self.curve))
