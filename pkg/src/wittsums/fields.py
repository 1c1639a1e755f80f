"""Finite fields F_{p^m} with integer-coded elements.

Elements are encoded as integers in [0, p^m): the code sum(c_i * p^i)
stands for the residue class of sum(c_i * x^i) modulo the field's
irreducible modulus.  All arithmetic goes through exp/log (Zech) tables,
so individual operations are O(1) after a one-time O(q) table build.
"""

from __future__ import annotations

from functools import lru_cache

import sympy

#: hard ceiling on field size; table construction is O(q) in memory.
FIELD_SIZE_CAP = 1 << 23


class FieldCapError(ValueError):
    """Requested field exceeds the desk-scale enumeration cap."""


def _code_to_coeffs(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return out


def _coeffs_to_code(coeffs, p: int) -> int:
    code = 0
    for c in reversed(list(coeffs)):
        code = code * p + (c % p)
    return code


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic of degree m; a, b of degree < m
    m = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for d in range(len(res) - 1, m - 1, -1):
        c = res[d]
        if c:
            res[d] = 0
            for j in range(m):
                res[d - m + j] = (res[d - m + j] - c * mod[j]) % p
    res = res[:m]
    while len(res) < m:
        res.append(0)
    return res


def _poly_pow_mod(a: list[int], n: int, mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    res = [1] + [0] * (m - 1)
    base = list(a)
    while n:
        if n & 1:
            res = _poly_mul_mod(res, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        n >>= 1
    return res


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    # coeffs[i] = coefficient of x^i, monic of degree m
    m = len(coeffs) - 1
    if m == 1:
        return True
    x = [0, 1] + [0] * (m - 2)
    # x^(p^m) == x mod f
    t = x
    for _ in range(m):
        t = _poly_pow_mod(t, p, coeffs, p)
    if t != x:
        return False
    for r in sorted(set(sympy.primefactors(m))):
        t = x
        for _ in range(m // r):
            t = _poly_pow_mod(t, p, coeffs, p)
        # gcd(x^(p^(m/r)) - x, f) must be 1
        diff = [(ti - xi) % p for ti, xi in zip(t, x)]
        if _poly_gcd_is_nonconst(diff, coeffs, p):
            return False
    return True


def _poly_gcd_is_nonconst(a: list[int], f: list[int], p: int) -> bool:
    def trim(u):
        u = list(u)
        while u and u[-1] == 0:
            u.pop()
        return u

    def pmod(u, v):
        u = list(u)
        inv = pow(v[-1], -1, p)
        while len(u) >= len(v):
            c = u[-1] * inv % p
            if c:
                for j in range(len(v)):
                    u[len(u) - len(v) + j] = (u[len(u) - len(v) + j] - c * v[j]) % p
            u.pop()
            u = trim(u)
            if not u:
                return u
        return u

    a, b = trim(f), trim(a)
    while b:
        a, b = b, pmod(a, b)
    return len(a) > 1


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over F_p, minimal in the base-p
    integer encoding of its non-leading coefficients."""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        coeffs = _code_to_coeffs(code, p, m) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible found")  # pragma: no cover


class FiniteField:
    """F_{p^m}; also usable directly as a Witt coefficient ring.

    Ring-protocol methods (add, mul, neg, pow, ...) act on integer codes.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None):
        if not sympy.isprime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1:
            raise ValueError("m must be >= 1")
        q = p**m
        if q > FIELD_SIZE_CAP:
            raise FieldCapError(f"field size {q} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.m = m
        self.q = q
        self.char = p
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not _is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible")
        self.modulus = modulus
        self._build_tables()

    # -- table construction ------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        mod = list(self.modulus)
        # find a generator of the multiplicative group
        factors = sympy.primefactors(q - 1) if q > 2 else []
        gen = None
        for cand in range(p if m > 1 else 2, q):
            cc = _code_to_coeffs(cand, p, m)
            ok = all(
                _poly_pow_mod(cc, (q - 1) // r, mod, p) != [1] + [0] * (m - 1)
                for r in factors
            )
            if ok:
                gen = cc
                break
        if gen is None:  # q == 2
            gen = [1]
        exp = [0] * (q - 1)
        log = [0] * q
        log[0] = -1
        cur = [1] + [0] * (m - 1)
        for k in range(q - 1):
            code = _coeffs_to_code(cur, p)
            exp[k] = code
            log[code] = k
            cur = _poly_mul_mod(cur, gen, mod, p)
        self.exp = exp
        self.log = log
        self.generator = exp[1] if q > 2 else 1
        if p == 2:
            self._zech = None
            self._half = None
        else:
            # zech[k] = log(1 + g^k); -1 where 1 + g^k == 0
            plus1 = self._plus_one
            self._zech = [log[plus1(e)] if plus1(e) else -1 for e in exp]
            self._half = (q - 1) // 2 if q % 2 == 1 else None
        self._minus_one = self.exp[(q - 1) // 2] if p != 2 and q > 2 else 1

    def _plus_one(self, code: int) -> int:
        c0 = code % self.p
        return code - c0 + (c0 + 1) % self.p

    # -- ring protocol on integer codes ------------------------------------

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    def eq(self, a: int, b: int) -> bool:
        return a == b

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        i, j = self.log[a], self.log[b]
        d = (j - i) % (self.q - 1)
        z = self._zech[d]
        if z < 0:
            return 0
        return self.exp[(i + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self.exp[(self.log[a] + self._half) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.exp[-self.log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def pth_root(self, a: int) -> int:
        """Unique b with b^p == a."""
        return self.pow(a, self.p ** (self.m - 1))

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times)

    def elements(self):
        return range(self.q)

    def trace_to_prime(self, a: int) -> int:
        """Absolute trace down to F_p, returned as an int in [0, p)."""
        t = 0
        cur = a
        for _ in range(self.m):
            t = self.add(t, cur)
            cur = self.pow(cur, self.p)
        return t  # codes of prime-field elements are the ints 0..p-1

    def coeffs(self, a: int) -> list[int]:
        return _code_to_coeffs(a, self.p, self.m)

    def encode(self, coeffs) -> int:
        return _coeffs_to_code(coeffs, self.p)

    def __repr__(self):
        return f"FiniteField({self.p}, {self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


class FieldEmbedding:
    """The embedding F_{p^m} -> F_{p^(m*d)} fixing F_p, determined by a
    chosen root of the small field's modulus in the big field."""

    def __init__(self, small: FiniteField, big: FiniteField):
        if small.p != big.p or big.m % small.m != 0:
            raise ValueError("no embedding: degree mismatch")
        self.small = small
        self.big = big
        self._root = self._find_root()
        self._powers = [1]
        for _ in range(small.m - 1):
            self._powers.append(big.mul(self._powers[-1], self._root))

    def _find_root(self) -> int:
        small, big = self.small, self.big
        if small.m == 1:
            return 1  # unused
        # roots of the small modulus lie in the subfield of order small.q,
        # i.e. among 0 and the powers of h = g^((Q-1)/(q-1))
        h = big.exp[(big.q - 1) // (small.q - 1)]
        cand = 1
        mod_codes = [c for c in small.modulus]  # prime-field codes
        for _ in range(small.q - 1):
            acc = 0
            for c in reversed(mod_codes):
                acc = big.add(big.mul(acc, cand), c)
            if acc == 0:
                return cand
            cand = big.mul(cand, h)
        raise RuntimeError("modulus has no root in extension")  # pragma: no cover

    def __call__(self, a: int) -> int:
        small, big = self.small, self.big
        if small.m == 1:
            return a
        acc = 0
        for c, rp in zip(small.coeffs(a), self._powers):
            if c:
                acc = big.add(acc, big.mul(c, rp))
        return acc


@lru_cache(maxsize=None)
def get_field(p: int, m: int) -> FiniteField:
    return FiniteField(p, m)


@lru_cache(maxsize=None)
def get_embedding(p: int, m: int, md: int) -> FieldEmbedding:
    return FieldEmbedding(get_field(p, m), get_field(p, md))
