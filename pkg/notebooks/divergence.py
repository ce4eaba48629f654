"""
Divergence theorem and Green's formula
======================================

Three divergence formulas (Berezinian, Christoffel and frame based) agree, and
the ball integral of div X equals the flux through the supersphere.
"""
import random
from fractions import Fraction

from supersphere import (RadialCoeff, SpaceDims, SuperFun, VectorField, boundary_flux, divergence,
                         flat_metric, verify_divergence_theorem, verify_green)

rng = random.Random(0)
d = SpaceDims(3, 1)
g = flat_metric(d)


def rand_fun(parity):
    out = SuperFun.zero(d)
    subsets = [I for I in [(), (1,), (2,), (1, 2)] if len(I) % 2 == parity]
    for _ in range(3):
        alpha = tuple(rng.randint(0, 1) for _ in range(3))
        c = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
        out = out + SuperFun.coeff(d, RadialCoeff.monomial(3, c, alpha), rng.choice(subsets))
    return out


X = VectorField(d, [rand_fun(d.parity(k)) for k in range(1, d.total + 1)])
print(X)
for formula in ("i", "ii", "iii"):
    print(formula, divergence(g, X, formula))

rep = verify_divergence_theorem(X)
print("ball:", rep.lhs, " flux:", rep.rhs, " equal:", rep.equal)

# an odd field
Y = VectorField.coord(d, 4, SuperFun.x(d, 1) * SuperFun.x(d, 2))
print(verify_divergence_theorem(Y).equal)

# Green's formula for an odd pair
print(verify_green(SuperFun.theta(d, 1), SuperFun.theta(d, 2) * SuperFun.x(d, 3)).equal)

# For M = 0 the flux of x1 d1 is a constant the ball integral cannot see: the
# gamma retraction is singular at the origin.
d0 = SpaceDims(2, 1)
print(boundary_flux(VectorField.coord(d0, 1, SuperFun.x(d0, 1))))
