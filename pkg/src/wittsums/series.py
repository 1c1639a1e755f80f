"""Truncated Laurent series over a finite field.

A series knows its valuation, a coefficient window, and an absolute
precision: coefficients of t^e are known for all e < prec.  A series that
is zero to its precision has an empty window and val == prec.
"""

from __future__ import annotations

from .fields import FiniteField


class PrecisionError(ArithmeticError):
    """A computation needed more series terms than were available."""


class LaurentSeries:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field: FiniteField, val: int, coeffs, prec: int):
        coeffs = list(coeffs)
        # normalize: strip leading zeros, clamp window to precision
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        if val + len(coeffs) > prec:
            coeffs = coeffs[: prec - val]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            val = prec
        self.field = field
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def zero(cls, field, prec):
        return cls(field, prec, [], prec)

    @classmethod
    def const(cls, field, c, prec):
        return cls(field, 0, [c], prec)

    @classmethod
    def t_power(cls, field, n, prec, c=1):
        return cls(field, n, [c], prec)

    def is_zero(self) -> bool:
        """Zero to working precision."""
        return not self.coeffs

    def coeff(self, e: int) -> int:
        if e >= self.prec:
            raise PrecisionError(f"coefficient of t^{e} beyond precision {self.prec}")
        if e < self.val or e >= self.val + len(self.coeffs):
            return 0
        return self.coeffs[e - self.val]

    def leading(self) -> int:
        if not self.coeffs:
            raise PrecisionError("leading coefficient of a zero-to-precision series")
        return self.coeffs[0]

    def valuation(self) -> int:
        if not self.coeffs:
            raise PrecisionError("valuation of a zero-to-precision series")
        return self.val

    def truncate(self, prec: int) -> "LaurentSeries":
        if prec > self.prec:
            raise PrecisionError("cannot extend precision by truncation")
        return LaurentSeries(self.field, self.val, self.coeffs, prec)

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by t^n."""
        return LaurentSeries(self.field, self.val + n, self.coeffs, self.prec + n)

    def __add__(self, other):
        F = self.field
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val, prec)
        out = [0] * (prec - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.val + i
                if e < prec:
                    out[e - lo] = F.add(out[e - lo], c)
        return LaurentSeries(F, lo, out, prec)

    def __neg__(self):
        F = self.field
        return LaurentSeries(F, self.val, [F.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if not self.coeffs or not other.coeffs:
            prec = min(
                self.val + other.prec if not other.coeffs else other.val + self.prec,
                other.val + self.prec if not self.coeffs else self.val + other.prec,
            )
            return LaurentSeries.zero(F, prec)
        prec = min(self.val + other.prec, other.val + self.prec)
        lo = self.val + other.val
        out = [0] * (prec - lo)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b and i + j < len(out):
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return LaurentSeries(F, lo, out, prec)

    def scale(self, c: int) -> "LaurentSeries":
        F = self.field
        if c == 0:
            return LaurentSeries.zero(F, self.prec)
        return LaurentSeries(F, self.val, [F.mul(c, a) for a in self.coeffs], self.prec)

    def inverse(self) -> "LaurentSeries":
        F = self.field
        if not self.coeffs:
            raise PrecisionError("inverting a zero-to-precision series")
        n = self.prec - self.val  # number of known coefficients
        a = self.coeffs + [0] * (n - len(self.coeffs))
        inv0 = F.inv(a[0])
        out = [inv0] + [0] * (n - 1)
        for k in range(1, n):
            s = 0
            for j in range(1, k + 1):
                if j < len(a) and a[j] and out[k - j]:
                    s = F.add(s, F.mul(a[j], out[k - j]))
            out[k] = F.neg(F.mul(inv0, s))
        return LaurentSeries(F, -self.val, out, -self.val + n)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentSeries.const(self.field, 1, self.prec - self.val if self.coeffs else self.prec)
        res = None
        base = self
        while n:
            if n & 1:
                res = base if res is None else res * base
            n >>= 1
            if n:
                base = base * base
        return res

    def __repr__(self):
        terms = [f"{c}*t^{self.val + i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"LaurentSeries({body} + O(t^{self.prec}))"


def eval_poly_at_series(coeffs, s: LaurentSeries, emb=None) -> LaurentSeries:
    """Evaluate a polynomial (integer-code coefficients, index = degree) at a
    series, by Horner; coefficients optionally pass through an embedding."""
    F = s.field
    coeffs = list(coeffs)
    if not coeffs:
        return LaurentSeries.zero(F, s.prec)
    acc = None
    for c in reversed(coeffs):
        cc = emb(c) if emb else c
        if acc is None:
            acc = LaurentSeries.const(F, cc, s.prec)
        else:
            acc = acc * s + LaurentSeries.const(F, cc, s.prec)
    return acc
