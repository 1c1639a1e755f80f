"""Witt vectors of length l over any coefficient ring of characteristic p.

The ring structure is driven by universal sum/product/negation polynomials,
computed once per (p, l) by exact big-integer ghost recursion and reduced
mod p.  Coefficient rings are duck-typed: they expose
zero/one/from_int/add/sub/mul/neg/pow/eq/is_zero and a `char` attribute.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import sympy

MAX_LENGTH = 4  # universal polynomial size grows too fast beyond this


@dataclass(frozen=True)
class WittParams:
    p: int
    l: int

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if not 1 <= self.l <= MAX_LENGTH:
            raise ValueError(f"length l={self.l} outside supported range 1..{MAX_LENGTH}")


def _ghost(vars_, p, i):
    return sum(p**j * vars_[j] ** (p ** (i - j)) for j in range(i + 1))


def _solve_recursion(p, l, target):
    """Solve w_i(result) = target_i over the integers; returns sympy exprs."""
    rs = []
    xs = sympy.symbols(f"r0:{l}")
    for i in range(l):
        expr = target(i) - sum(
            p**j * rs[j] ** (p ** (i - j)) for j in range(i)
        )
        expr = sympy.expand(expr)
        # exact division by p^i, coefficient-wise
        poly = sympy.Poly(expr, *_all_symbols(expr)) if expr.free_symbols else None
        if poly is None:
            val = int(expr)
            assert val % (p**i) == 0
            rs.append(sympy.Integer(val // p**i))
        else:
            terms = poly.terms()
            new = 0
            gens = poly.gens
            for exps, coeff in terms:
                c = int(coeff)
                assert c % (p**i) == 0, "ghost recursion not integral"
                mon = sympy.prod([g**e for g, e in zip(gens, exps)])
                new += (c // p**i) * mon
            rs.append(sympy.expand(new))
    return rs


def _all_symbols(expr):
    return sorted(expr.free_symbols, key=lambda s: s.name)


@lru_cache(maxsize=None)
def compute_universal_polys(p: int, l: int) -> "UniversalWittPolys":
    """Sum, product and negation polynomials for W_l, coefficients mod p.

    Each polynomial is a tuple of (coeff, exponents) terms; exponents index
    the 2l variables X_0..X_{l-1}, Y_0..Y_{l-1} (negation uses only the X's).
    """
    WittParams(p, l)  # validate
    xs = sympy.symbols(f"x0:{l}")
    ys = sympy.symbols(f"y0:{l}")

    def to_terms(expr, vars_, reduce_mod_p):
        expr = sympy.expand(expr)
        if expr == 0:
            return ()
        poly = sympy.Poly(expr, *vars_)
        out = []
        for exps, coeff in poly.terms():
            c = int(coeff) % p if reduce_mod_p else int(coeff)
            if c:
                out.append((c, tuple(int(e) for e in exps)))
        return tuple(out)

    s_exprs = _solve_recursion(p, l, lambda i: _ghost(xs, p, i) + _ghost(ys, p, i))
    m_exprs = _solve_recursion(p, l, lambda i: _ghost(xs, p, i) * _ghost(ys, p, i))
    n_exprs = _solve_recursion(p, l, lambda i: -_ghost(xs, p, i))
    allvars = tuple(xs) + tuple(ys)
    sums = tuple(to_terms(e, allvars, True) for e in s_exprs)
    prods = tuple(to_terms(e, allvars, True) for e in m_exprs)
    negs = tuple(to_terms(e, allvars, True) for e in n_exprs)
    sums_z = tuple(to_terms(e, allvars, False) for e in s_exprs)
    prods_z = tuple(to_terms(e, allvars, False) for e in m_exprs)
    return UniversalWittPolys(
        p=p, l=l, sums=sums, prods=prods, negs=negs, sums_z=sums_z, prods_z=prods_z
    )


def eval_integer_terms(terms, vals) -> int:
    """Evaluate an un-reduced (integer) term list at integer arguments."""
    acc = 0
    for coeff, exps in terms:
        t = coeff
        for idx, e in enumerate(exps):
            if e:
                t *= vals[idx] ** e
        acc += t
    return acc


@dataclass(frozen=True)
class UniversalWittPolys:
    p: int
    l: int
    sums: tuple
    prods: tuple
    negs: tuple
    sums_z: tuple
    prods_z: tuple


def _eval_terms(terms, vals, ring):
    """Evaluate a term list at vals (length 2l sequence of ring elements)."""
    acc = ring.zero()
    pow_cache = {}
    for coeff, exps in terms:
        term = None
        for idx, e in enumerate(exps):
            if e == 0:
                continue
            key = (idx, e)
            v = pow_cache.get(key)
            if v is None:
                v = ring.pow(vals[idx], e)
                pow_cache[key] = v
            term = v if term is None else ring.mul(term, v)
        if term is None:
            term = ring.one()
        # coeff is in [1, p); multiply by repeated addition
        t = term
        for _ in range(coeff - 1):
            t = ring.add(t, term)
        acc = ring.add(acc, t)
    return acc


class WittVector:
    """Immutable Witt vector; `ring` is the coefficient ring descriptor."""

    __slots__ = ("params", "ring", "coords")

    def __init__(self, params: WittParams, ring, coords):
        coords = tuple(coords)
        if len(coords) != params.l:
            raise ValueError("coordinate count != l")
        if ring.char != params.p:
            raise ValueError("coefficient ring characteristic != p")
        self.params = params
        self.ring = ring
        self.coords = coords

    @classmethod
    def zero(cls, params, ring):
        return cls(params, ring, [ring.zero()] * params.l)

    @classmethod
    def one(cls, params, ring):
        return cls(params, ring, [ring.one()] + [ring.zero()] * (params.l - 1))

    @classmethod
    def teichmuller(cls, params, ring, a):
        return cls(params, ring, [a] + [ring.zero()] * (params.l - 1))

    def _check(self, other):
        if self.params != other.params or self.ring != other.ring:
            raise ValueError("mismatched Witt parameters or coefficient rings")

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return (
            self.params == other.params
            and self.ring == other.ring
            and all(self.ring.eq(a, b) for a, b in zip(self.coords, other.coords))
        )

    def __hash__(self):
        return hash((self.params, tuple(map(str, self.coords))))

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coords)

    def __add__(self, other):
        self._check(other)
        up = compute_universal_polys(self.params.p, self.params.l)
        vals = self.coords + other.coords
        return WittVector(
            self.params, self.ring, [_eval_terms(up.sums[i], vals, self.ring) for i in range(self.params.l)]
        )

    def __mul__(self, other):
        self._check(other)
        up = compute_universal_polys(self.params.p, self.params.l)
        vals = self.coords + other.coords
        return WittVector(
            self.params, self.ring, [_eval_terms(up.prods[i], vals, self.ring) for i in range(self.params.l)]
        )

    def __neg__(self):
        up = compute_universal_polys(self.params.p, self.params.l)
        vals = self.coords + tuple([self.ring.zero()] * self.params.l)
        return WittVector(
            self.params, self.ring, [_eval_terms(up.negs[i], vals, self.ring) for i in range(self.params.l)]
        )

    def __sub__(self, other):
        return self + (-other)

    def scalar(self, n: int) -> "WittVector":
        """n * self for an integer n (via double-and-add)."""
        if n < 0:
            return (-self).scalar(-n)
        acc = WittVector.zero(self.params, self.ring)
        base = self
        while n:
            if n & 1:
                acc = acc + base
            if n > 1:
                base = base + base
            n >>= 1
        return acc

    def verschiebung(self, k: int = 1) -> "WittVector":
        if not 0 <= k <= self.params.l:
            raise ValueError("shift count out of range")
        z = self.ring.zero()
        return WittVector(self.params, self.ring, (z,) * k + self.coords[: self.params.l - k])

    def frobenius(self) -> "WittVector":
        p = self.params.p
        return WittVector(self.params, self.ring, [self.ring.pow(c, p) for c in self.coords])

    def __repr__(self):
        return f"WittVector({self.coords})"


def verschiebung(a: WittVector, k: int = 1) -> WittVector:
    return a.verschiebung(k)


def frobenius(a: WittVector) -> WittVector:
    return a.frobenius()


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    return a + b


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    return a * b


class IntegerRing:
    """Z, as a characteristic-0 test ring for ghost-compatibility checks."""

    char = 0

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
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
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")


def ghost_components(p: int, coords) -> tuple[int, ...]:
    """Ghost map for integer coordinates: w_i = sum p^j a_j^(p^(i-j))."""
    coords = tuple(coords)
    if not all(isinstance(c, int) for c in coords):
        raise TypeError("ghost components are defined over the integers only")
    return tuple(
        sum(p**j * coords[j] ** (p ** (i - j)) for j in range(i + 1))
        for i in range(len(coords))
    )
