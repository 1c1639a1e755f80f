"""Square-root bounds and brute-force verification sweeps.

Every character sum computed by the package obeys an explicit bound of the
shape (conductor data) * p^(m/2).  This demo evaluates the closed-form
bounds and then verifies one of them exhaustively on a small Galois ring.
"""

from wittsums import (
    BoundInputs,
    EllipticCurve,
    EllipticFunction,
    EllipticFunctionField,
    PoleData,
    bound_cor52,
    bound_kumar,
    bound_thm31,
    get_field,
    sum_witt,
    verify_sweep,
    witt_function,
)

print("Digit-degree bound for f = f_0 + p f_1 over GR(4,3), deg (3, 1):")
print(f"  bound = {bound_kumar(2, 2, 3, [3, 1]):.4f}  (= 5 * 2^1.5)")
print()

print("Closed-form genus-1 bound (l = 2), one pole of order 2, p = 3:")
inputs = BoundInputs(p=3, l=2, m=1, genus=1, poles=(PoleData(deg=1, pole_orders=(2, 0)),))
print(f"  bound = {bound_cor52(inputs):.4f}  (coefficient 13 times 3^(1/2))")
print()

print("Conductor bound on the curve y^2 + y = x^3 over F_2, f = (y, 0):")
E = EllipticCurve(get_field(2, 1), 0, 0, 1, 0, 0)
ring = EllipticFunctionField(E)
fvec = witt_function(ring, (EllipticFunction.y(E), EllipticFunction.zero(E)))
for d in (1, 2, 3):
    bound = bound_thm31(fvec, d)
    measured = sum_witt(fvec, d).modulus
    print(f"  d = {d}:  |S_d| = {measured:9.4f}  <=  bound {bound:9.4f}")
print()

print("Exhaustive sweep of the digit-degree bound over GR(4,1):")
reports = verify_sweep("kumar", p=2, l=2, m=1, deg0=2, deg1=1)
violations = [r for r in reports if not r.passed]
worst = max(reports, key=lambda r: r.ratio)
print(f"  {len(reports)} instances, {len(violations)} violations")
print(
    f"  sharpest instance: {worst.instance}  |S| = {worst.measured:.4f}, "
    f"bound = {worst.bound:.4f}, ratio = {worst.ratio:.4f}"
)
