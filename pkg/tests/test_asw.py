"""Artin reduction, reduced pole orders, conductors, nondegeneracy, and the
cover genus formula."""

import random

from wittsums import (
    EllipticCurve,
    EllipticFunction,
    EllipticFunctionField,
    FinitePlace,
    InfinitePlace,
    OriginPlace,
    Poly,
    RationalFunction,
    RationalFunctionField,
    artin_reduce_at,
    conductor,
    genus_of_cover,
    is_nondegenerate,
    reduced_pole_order,
    witt_function,
    wp,
)
from wittsums.fields import get_field


def p1_ring(p=2, m=1):
    return RationalFunctionField(get_field(p, m))


def fvec_p1(ring, *coord_builders):
    F = ring.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    coords = [b(x) if callable(b) else (zero if b == 0 else b) for b in coord_builders]
    return witt_function(ring, coords)


def test_wp_examples():
    K = p1_ring()
    x = RationalFunction.x(K.field)
    zero = RationalFunction.zero(K.field)
    f = witt_function(K, (x, zero))
    pf = wp(f)
    assert pf.coords[0] == x * x + x
    assert pf.coords[1] == x**3 + x * x
    assert wp(witt_function(K, (zero, zero))).is_zero()
    # classical Artin-Schreier for l = 1
    g = witt_function(K, (x,))
    assert wp(g).coords[0] == x * x - x


def test_reduce_examples():
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    px = FinitePlace(Poly(F, (0, 1)))
    f = witt_function(K, (x ** (-2), zero))
    rf = artin_reduce_at(f, px)
    assert rf.check(f)
    assert rf.reduced.coords[0] == x ** (-1)
    assert rf.reduced.coords[1].is_zero()
    # valuations already prime to p: unchanged, witness zero
    g = witt_function(K, (x ** (-1), x ** (-3)))
    rg = artin_reduce_at(g, px)
    assert rg.reduced == g and rg.witness.is_zero()
    # exact classes of wp reduce to something with no pole at P
    rng = random.Random(2)
    for _ in range(5):
        h = witt_function(
            K,
            tuple(
                x ** (-rng.randrange(0, 4)) if rng.random() < 0.8 else zero
                for _ in range(2)
            ),
        )
        r = artin_reduce_at(wp(h), px)
        assert r.check(wp(h))
        for c in r.reduced.coords:
            assert c.is_zero() or c.valuation_at(px) >= 0


def test_reduced_pole_order_examples():
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    px = FinitePlace(Poly(F, (0, 1)))
    assert reduced_pole_order(witt_function(K, (x ** (-3), zero)), px) == 6
    assert reduced_pole_order(witt_function(K, (x ** (-1), x ** (-3))), px) == 3
    assert reduced_pole_order(witt_function(K, (x ** (-2), zero)), px) == 2


def test_conductor_examples():
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    f = witt_function(K, (x, zero))
    c = conductor(f)
    assert c.degree == 3
    assert len(c.entries) == 1 and isinstance(c.entries[0][0], InfinitePlace)
    assert conductor(witt_function(K, (x**3, zero))).degree == 7
    assert conductor(witt_function(K, (RationalFunction.one(F), zero))).degree == 0


def test_nondegeneracy_examples():
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    one = RationalFunction.one(F)
    assert is_nondegenerate(witt_function(K, (x, zero)))
    assert not is_nondegenerate(witt_function(K, (x * x + x, zero)))
    assert not is_nondegenerate(witt_function(K, (one, x)))


def test_rp_class_invariance_and_subadditivity():
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    px = FinitePlace(Poly(F, (0, 1)))
    rng = random.Random(4)

    def rand_f():
        return witt_function(
            K, tuple(x ** (-rng.randrange(0, 4)) for _ in range(2))
        )

    for _ in range(8):
        f = rand_f()
        g = rand_f()
        base = reduced_pole_order(f, px)
        assert reduced_pole_order(f + wp(g), px) == base
        ra, rb = base, reduced_pole_order(g, px)
        rsum = reduced_pole_order(f + g, px)
        assert rsum <= max(ra, rb)
        if ra != rb:
            assert rsum == max(ra, rb)


def test_rp_verschiebung_inequality():
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    px = FinitePlace(Poly(F, (0, 1)))
    for n in (1, 3):
        a = witt_function(K, (x ** (-n), x ** (-n)))
        va = witt_function(K, (RationalFunction.zero(F), a.coords[0]))
        assert 2 * reduced_pole_order(va, px) <= reduced_pole_order(a, px) * 2
        # p^k rp(V^k a) <= rp(a) with p = 2, k = 1
        assert 2 * reduced_pole_order(va, px) <= 2 * reduced_pole_order(a, px)
        assert 2 * reduced_pole_order(va, px) <= reduced_pole_order(a, px) or (
            reduced_pole_order(va, px) <= 0
        )


def test_genus_examples():
    K3 = p1_ring(3, 1)
    x3 = RationalFunction.x(K3.field)
    assert genus_of_cover(witt_function(K3, (x3 * x3,)), 0) == 1
    K2 = p1_ring(2, 1)
    x2 = RationalFunction.x(K2.field)
    assert genus_of_cover(witt_function(K2, (x2**3,)), 0) == 1
    zero = RationalFunction.zero(K2.field)
    f = witt_function(K2, (x2, zero))
    # l=2: sum conductor degrees of the multiples n*f, n = 1..3
    total = 2 * 4 * (0 - 1)
    for n in range(1, 4):
        total += conductor(f.scalar(n)).degree
    assert genus_of_cover(f, 0) == total // 2 + 1


def test_elliptic_reduction_at_origin():
    F2 = get_field(2, 1)
    E = EllipticCurve(F2, 0, 0, 1, 0, 0)
    ring = EllipticFunctionField(E)
    x = EllipticFunction.x(E)
    y = EllipticFunction.y(E)
    zero = EllipticFunction.zero(E)
    O = OriginPlace(E)
    # x has even pole order 2 at O: reduction must leave valuation odd or >= 0
    f = witt_function(ring, (x, zero))
    rf = artin_reduce_at(f, O)
    assert rf.check(f)
    for c in rf.reduced.coords:
        if not c.is_zero():
            v = c.valuation_at(O)
            assert v >= 0 or (-v) % 2 == 1
    # y has pole order 3, already prime to p
    g = witt_function(ring, (y, zero))
    assert reduced_pole_order(g, O) == 6
    assert conductor(g).degree == 7


def test_degree2_place_reduction():
    # poles at the quadratic place of P^1/F_2 are handled by constant extension
    K = p1_ring()
    F = K.field
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    pi = Poly(F, (1, 1, 1))
    place = FinitePlace(pi)
    quad = RationalFunction.from_poly(pi)
    f = witt_function(K, (RationalFunction.one(F) / (quad * quad), zero))
    rp = reduced_pole_order(f, place)
    assert rp == 2  # reduces from order 2p to order... exactly as at (x)
    c = conductor(f)
    assert c.degree == (rp + 1) * 2
