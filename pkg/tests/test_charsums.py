"""Character sums, the affine-line identity, L-functions, and the bound
evaluators with their worked values."""

import random

import pytest

from wittsums import (
    BoundInputs,
    CyclotomicInteger,
    DegenerateInputError,
    EllipticCurve,
    EllipticFunction,
    EllipticFunctionField,
    InfinitePlace,
    PoleData,
    RationalFunction,
    RationalFunctionField,
    bound_cor52,
    bound_cor53,
    bound_kumar,
    bound_thm31,
    bound_thm51,
    gamma_s,
    gamma_s_rational,
    get_field,
    get_galois_ring,
    l_function,
    power_sums_from_l,
    sum_teichmuller,
    sum_witt,
    theorem12_check,
    verify_sweep,
    witt_function,
)


def p1_fvec(p, m, *powers):
    F = get_field(p, m)
    K = RationalFunctionField(F)
    x = RationalFunction.x(F)
    zero = RationalFunction.zero(F)
    coords = tuple(zero if n is None else x**n for n in powers)
    return witt_function(K, coords)


# -- affine-line section ------------------------------------------------------


def test_gamma_s_digits():
    R = get_galois_ring(2, 2, 1)
    w = gamma_s(R, [0, 1])  # f(T) = T
    assert w.coords[0].coeffs == (0, 1)  # x
    assert w.coords[1].is_zero()
    w2 = gamma_s(R, [1, 0, 1])  # f(T) = 1 + T^2
    assert w2.coords[0].coeffs == (1, 0, 1)


def test_sum_teichmuller_examples():
    Z4 = get_galois_ring(2, 2, 1)
    res = sum_teichmuller(Z4, [0, 1])  # f = T over {0, 1}
    i = CyclotomicInteger.zeta_pow(2, 2, 1)
    assert res.value == CyclotomicInteger.one(2, 2) + i
    assert abs(res.modulus - 2**0.5) < 1e-12
    # constant f = 0 sums the trivial character over the 2-element set
    res0 = sum_teichmuller(Z4, [0])
    assert res0.value == CyclotomicInteger.from_int(2, 2, 2)
    Z9 = get_galois_ring(3, 2, 1)
    res1 = sum_teichmuller(Z9, [1])
    assert abs(res1.modulus - 3.0) < 1e-12


def test_theorem12_identity_examples():
    Z4 = get_galois_ring(2, 2, 1)
    assert theorem12_check(Z4, [0, 1])
    assert theorem12_check(Z4, [1, 1, 1])
    assert theorem12_check(Z4, [0])  # constant
    R = get_galois_ring(3, 2, 1)
    assert theorem12_check(R, [0, 1, 0, 2])


def test_theorem12_random():
    rng = random.Random(2024)
    for p, l, m in [(2, 2, 1), (2, 2, 2), (3, 2, 1), (2, 3, 1)]:
        R = get_galois_ring(p, l, m)
        for _ in range(6):
            deg = rng.randrange(0, 4)
            coeffs = [rng.randrange(p**l) for _ in range(deg + 1)]
            assert theorem12_check(R, coeffs)


def test_sum_witt_power_sums_of_x0():
    # S_1 = 1 + i and S_2 = -2i = -(1+i)^2 for f = (x, 0) on P^1/F_2
    fvec = p1_fvec(2, 1, 1, None)
    inf = [InfinitePlace(get_field(2, 1))]
    i = CyclotomicInteger.zeta_pow(2, 2, 1)
    one = CyclotomicInteger.one(2, 2)
    s1 = sum_witt(fvec, 1, exclusions=inf)
    s2 = sum_witt(fvec, 2, exclusions=inf)
    assert s1.value == one + i
    assert s2.value == CyclotomicInteger.zero(2, 2) - ((one + i) * (one + i))


def test_frobenius_orbit_invariance():
    # |S(f)| = |S(F f)|
    fvec = p1_fvec(2, 2, 3, 1)
    ffvec = fvec.frobenius()
    for d in (1, 2):
        a = sum_witt(fvec, d)
        b = sum_witt(ffvec, d)
        assert abs(a.modulus - b.modulus) < 1e-9


# -- L-functions --------------------------------------------------------------


def test_l_function_worked_case():
    fvec = p1_fvec(2, 1, 1, None)
    res = l_function(fvec, terms=4)
    assert res.claimed_degree == 1
    assert res.conductor_degree == 3
    one = CyclotomicInteger.one(2, 2)
    i = CyclotomicInteger.zeta_pow(2, 2, 1)
    assert res.coefficients[0] == one
    assert res.coefficients[1] == one + i
    assert res.trailing_zero
    assert abs(res.inverse_root_moduli[0] - 2**0.5) < 1e-9


def test_l_function_degenerate_rejected():
    F = get_field(2, 1)
    K = RationalFunctionField(F)
    x = RationalFunction.x(F)
    fvec = witt_function(K, (x * x + x, RationalFunction.zero(F)))
    with pytest.raises(DegenerateInputError):
        l_function(fvec)
    with pytest.raises(DegenerateInputError):
        l_function(witt_function(K, (RationalFunction.zero(F),) * 2))


def test_l_function_degree5_riemann_hypothesis():
    fvec = p1_fvec(2, 1, 3, None)
    res = l_function(fvec)  # conductor 7, degree 5
    assert res.claimed_degree == 5
    assert res.trailing_zero
    for r in res.inverse_root_moduli:
        assert abs(r - 2**0.5) < 1e-6 * 2**0.5


def test_l_function_log_derivative_consistency():
    for fvec in [p1_fvec(2, 1, 3, None), p1_fvec(3, 1, 2, 1)]:
        p, l = fvec.params.p, fvec.params.l
        res = l_function(fvec)
        back = power_sums_from_l(res, p, l)
        assert back == res.power_sums


def test_conductor_sharpness_on_p1():
    # for pole orders prime to p, deg L = max(p^(l-1-i) deg f_i) - 1
    cases = [
        (p1_fvec(2, 1, 3, None), 2 * 3 - 1),
        (p1_fvec(2, 1, 1, 3), 3 - 1),
        (p1_fvec(2, 1, 3, 3), 2 * 3 - 1),
    ]
    for fvec, expect in cases:
        assert l_function(fvec).claimed_degree == expect


# -- bound evaluators ----------------------------------------------------------


def test_bound_kumar_worked_values():
    assert abs(bound_kumar(2, 2, 3, [3, 1]) - 5 * 2**1.5) < 1e-12
    assert abs(bound_kumar(2, 2, 3, [1, 0]) - 1 * 2**1.5) < 1e-12
    assert abs(bound_kumar(3, 1, 1, [2]) - 1 * 3**0.5) < 1e-12
    with pytest.raises(ValueError):
        bound_kumar(2, 2, 1, [0, 0])


def test_bound_thm31_worked_values():
    assert abs(bound_thm31(p1_fvec(2, 1, 3, None), 1) - 5 * 2**0.5) < 1e-12
    assert abs(bound_thm31(p1_fvec(2, 1, 1, None), 1) - 2**0.5) < 1e-12


def test_bound_thm31_genus1_single_pole():
    F2 = get_field(2, 1)
    E = EllipticCurve(F2, 0, 0, 1, 0, 0)
    ring = EllipticFunctionField(E)
    y = EllipticFunction.y(E)
    fvec = witt_function(ring, (y, EllipticFunction.zero(E)))
    # rp = 6 at the origin, genus 1: bound is (rp + 1) p^(md/2)
    assert abs(bound_thm31(fvec, 1) - 7 * 2**0.5) < 1e-12


def test_bound_thm51_cor52_cor53_worked_values():
    i51 = BoundInputs(
        p=3, l=2, m=1, genus=1, poles=(PoleData(deg=1, pole_orders=(2, 5), v=1, v0=1),)
    )
    assert abs(bound_thm51(i51) - 13 * 3**0.5) < 1e-12
    i52 = BoundInputs(p=3, l=2, m=1, genus=1, poles=(PoleData(deg=1, pole_orders=(2, 0)),))
    assert abs(bound_cor52(i52) - 13 * 3**0.5) < 1e-12
    assert abs(bound_cor53(i52) - 13 * 3**0.5) < 1e-12
    with pytest.raises(ValueError):
        bound_cor52(BoundInputs(p=3, l=3, m=1, genus=0, poles=i52.poles))
    with pytest.raises(ValueError):
        bound_cor53(BoundInputs(p=2, l=2, m=1, genus=0, poles=i52.poles))


def test_bound_inputs_validation():
    bad = BoundInputs(
        p=3, l=2, m=1, genus=1, poles=(PoleData(deg=1, pole_orders=(2, 0), v=7),)
    )
    with pytest.raises(ValueError):
        bound_thm51(bad)


# -- sweeps ---------------------------------------------------------------------


def test_sweep_kumar_small_clean():
    reports = verify_sweep("kumar", p=2, l=2, m=1, deg0=2, deg1=1)
    assert reports
    assert all(r.passed for r in reports)


def test_sweep_thm31_p1_clean():
    reports = verify_sweep("thm31-p1", p=2, l=2, m=1, max_a=3, max_b=2, d=1)
    assert reports
    assert all(r.passed for r in reports)


def test_sweep_empty():
    assert verify_sweep("empty") == []


def test_gamma_s_rational_matches_polynomials():
    R = get_galois_ring(2, 2, 1)
    w = gamma_s(R, [1, 1])
    wr = gamma_s_rational(R, [1, 1])
    for a, b in zip(w.coords, wr.coords):
        assert RationalFunction.from_poly(a) == b
