"""
Mean value theorems on the superball
====================================

Harmonic superfunctions average to their value at the origin, over both the
supersphere and the superball (with the gamma retraction).  With the standard
retraction only the top theta coefficient survives.
"""
from supersphere import (STD, SpaceDims, SuperFun, ball_integral, harmonic_basis, laplacian_flat,
                         render_superfun, sphere_integral, verify_mvt_ball, verify_mvt_sphere)

d = SpaceDims(3, 1)
x1, th1, th2 = SuperFun.x(d, 1), SuperFun.theta(d, 1), SuperFun.theta(d, 2)

f = th1 * th2 - x1 * x1 * 2
print("f =", render_superfun(f))
print("laplacian f =", render_superfun(laplacian_flat(d, f)))
print("sphere integral:", sphere_integral(f))
print("std ball integral:", ball_integral(f, d, STD))

# every element of the degree <= 4 harmonic basis
basis = harmonic_basis(d, 4)
ok = all(verify_mvt_sphere(g).equal and verify_mvt_ball(g).equal for g in basis)
print(len(basis), "basis elements, all pass:", ok)

# x1^2 is not harmonic, and the theorem fails for it
bad = x1 * x1
rep = verify_mvt_sphere(bad, check_harmonic=False)
print(rep.lhs, "vs", rep.rhs, "equal:", rep.equal)
