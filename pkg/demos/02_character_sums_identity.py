"""Exponential sums over the Teichmuller subset and the point-sum identity.

A polynomial f over GR(p^l, m), summed against the additive character over
the Teichmuller subset, equals a sum over the affine-line points of the
character applied to the trace of a Witt vector of polynomials (the image of
f under the affine-line section).  Both sums are computed exactly as
cyclotomic integers and compared.
"""

from wittsums import (
    InfinitePlace,
    gamma_s,
    gamma_s_rational,
    get_galois_ring,
    sum_teichmuller,
    sum_witt,
)

Z4 = get_galois_ring(2, 2, 1)
print("f(T) = T over Z/4, summed over the Teichmuller set {0, 1}:")
res = sum_teichmuller(Z4, [0, 1])
print(f"  S = {res.value}   |S| = {res.modulus:.5f}   (= |1 + i| = sqrt 2)")
print()

print("Its Witt image under the affine-line section:")
w = gamma_s(Z4, [0, 1])
print(f"  gamma(T) = ({w.coords[0]}, {w.coords[1]})")
fvec = gamma_s_rational(Z4, [0, 1])
rhs = sum_witt(fvec, 1, exclusions=[InfinitePlace(Z4.residue_field)])
print(f"  point sum over A^1(F_2): {rhs.value}")
print(f"  exact equality: {res.value == rhs.value}")
print()

print("The identity holds for every polynomial; a few more rings:")
for p, l, m, coeffs in [
    (2, 2, 1, [1, 1, 1]),
    (3, 2, 1, [0, 1, 0, 2]),
    (2, 3, 1, [0, 2, 1]),
    (3, 2, 2, [0, 1, 1]),
]:
    R = get_galois_ring(p, l, m)
    lhs = sum_teichmuller(R, coeffs)
    fv = gamma_s_rational(R, coeffs)
    rv = sum_witt(fv, 1, exclusions=[InfinitePlace(R.residue_field)])
    ok = lhs.value == rv.value
    print(
        f"  GR({p}^{l},{m}), f coeffs {coeffs}: |S| = {lhs.modulus:8.5f}  equal: {ok}"
    )
