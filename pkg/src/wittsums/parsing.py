"""Input grammars for the command line: arithmetic expressions over named
variables, Witt-vector component lists, Galois-ring polynomials, and
Weierstrass curve specifications.

Expressions use `^` or `**` for powers and the usual +, -, *, / and
parentheses; integer literals are mapped into the target ring.
"""

from __future__ import annotations

import ast

import sympy

from .elliptic import EllipticCurve, EllipticFunction
from .fields import FiniteField
from .galois_rings import GaloisRing
from .rational import RationalFunction


class ParseError(ValueError):
    pass


def _eval_node(node, env, from_int):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, env, from_int)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int):
            return from_int(node.value)
        raise ParseError(f"unsupported literal {node.value!r}")
    if isinstance(node, ast.Name):
        try:
            return env[node.id]
        except KeyError:
            raise ParseError(f"unknown variable {node.id!r}") from None
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand, env, from_int)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ParseError("unsupported unary operator")
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval_node(node.left, env, from_int)
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)) and not (
                isinstance(node.right, ast.UnaryOp)
                and isinstance(node.right.op, ast.USub)
                and isinstance(node.right.operand, ast.Constant)
            ):
                raise ParseError("exponents must be integer literals")
            if isinstance(node.right, ast.UnaryOp):
                exp = -node.right.operand.value
            else:
                exp = node.right.value
            return base**exp
        a = _eval_node(node.left, env, from_int)
        b = _eval_node(node.right, env, from_int)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
        raise ParseError("unsupported binary operator")
    raise ParseError(f"unsupported syntax element {type(node).__name__}")


def parse_expression(text: str, env: dict, from_int):
    """Evaluate an arithmetic expression with the given variable bindings."""
    src = text.replace("^", "**").strip()
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc}") from None
    try:
        return _eval_node(tree, env, from_int)
    except ZeroDivisionError:
        raise ParseError(f"division by zero in {text!r}") from None


def split_components(text: str) -> list[str]:
    """Split a parenthesized comma-separated vector into component strings."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"expected a parenthesized vector, got {text!r}")
    body = s[1:-1]
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        cur.append(ch)
    parts.append("".join(cur))
    if any(not part.strip() for part in parts):
        raise ParseError(f"empty component in {text!r}")
    return parts


def parse_rational_vector(text: str, field: FiniteField) -> list[RationalFunction]:
    env = {"x": RationalFunction.x(field)}

    def from_int(n):
        return RationalFunction.const(field, field.from_int(n))

    return [parse_expression(c, env, from_int) for c in split_components(text)]


def parse_elliptic_vector(text: str, curve: EllipticCurve) -> list[EllipticFunction]:
    env = {"x": EllipticFunction.x(curve), "y": EllipticFunction.y(curve)}

    def from_int(n):
        return EllipticFunction.const(curve, curve.field.from_int(n))

    return [parse_expression(c, env, from_int) for c in split_components(text)]


def parse_field_vector(text: str, field: FiniteField) -> list[int]:
    """Witt coordinates given as integer field codes."""
    out = []
    for part in split_components(text):
        try:
            code = int(part.strip())
        except ValueError:
            raise ParseError(f"expected an integer field code, got {part!r}") from None
        if not 0 <= code < field.q:
            raise ParseError(f"field code {code} out of range for F_{field.q}")
        out.append(code)
    return out


class _GRPoly:
    """Thin polynomial-over-GaloisRing wrapper for expression evaluation."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs):
        c = list(coeffs)
        while c and ring.is_zero(c[-1]):
            c.pop()
        self.ring = ring
        self.coeffs = c

    def __add__(self, other):
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = R.add(out[i], c)
        return _GRPoly(R, out)

    def __neg__(self):
        R = self.ring
        return _GRPoly(R, [R.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        R = self.ring
        if not self.coeffs or not other.coeffs:
            return _GRPoly(R, [])
        out = [R.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return _GRPoly(R, out)

    def __pow__(self, n):
        if n < 0:
            raise ParseError("negative powers are not polynomials")
        res = _GRPoly(self.ring, [self.ring.one()])
        for _ in range(n):
            res = res * self
        return res


def parse_gr_polynomial(text: str, ring: GaloisRing) -> list:
    """Coefficient list (constant first) of a polynomial in T over GR."""
    env = {"T": _GRPoly(ring, [ring.zero(), ring.one()])}

    def from_int(n):
        return _GRPoly(ring, [ring.from_int(n)])

    result = parse_expression(text, env, from_int)
    if not isinstance(result, _GRPoly):
        raise ParseError("expression did not evaluate to a polynomial")
    return result.coeffs if result.coeffs else [ring.zero()]


def parse_curve(text: str, field: FiniteField) -> EllipticCurve:
    """A long Weierstrass equation, e.g. 'y^2 + y = x^3 + x + 1'."""
    if "=" not in text:
        raise ParseError("curve specification needs '='")
    lhs, rhs = text.split("=", 1)
    x, y = sympy.symbols("x y")
    try:
        expr = sympy.expand(
            sympy.sympify(lhs.replace("^", "**")) - sympy.sympify(rhs.replace("^", "**"))
        )
    except (sympy.SympifyError, TypeError) as exc:
        raise ParseError(f"cannot parse curve {text!r}: {exc}") from None
    poly = sympy.Poly(expr, x, y)
    p = field.p
    coeff = {}
    for (ex, ey), c in zip(poly.monoms(), poly.coeffs()):
        coeff[(ex, ey)] = int(c)
    allowed = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}
    if set(coeff) - allowed:
        raise ParseError("not a Weierstrass equation")
    if coeff.get((0, 2), 0) % p != 1 or (-coeff.get((3, 0), 0)) % p != 1:
        raise ParseError("equation must be monic in y^2 and x^3")
    a1 = coeff.get((1, 1), 0) % p
    a3 = coeff.get((0, 1), 0) % p
    a2 = (-coeff.get((2, 0), 0)) % p
    a4 = (-coeff.get((1, 0), 0)) % p
    a6 = (-coeff.get((0, 0), 0)) % p
    return EllipticCurve(
        field,
        field.from_int(a1),
        field.from_int(a2),
        field.from_int(a3),
        field.from_int(a4),
        field.from_int(a6),
    )


def parse_ring_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError("ring must be given as p,l,m")
    try:
        p, l, m = (int(t) for t in parts)
    except ValueError:
        raise ParseError("ring components must be integers") from None
    return p, l, m
