"""
Changing the retraction
=======================

Integrals with the gamma and the standard retraction differ by a boundary term.
It can be computed as that difference, or directly from restricted radial
derivatives on the supersphere.
"""
from supersphere import (SpaceDims, SuperFun, boundary_term, boundary_term_direct, harmonic_basis,
                         render_superfun)

d = SpaceDims(3, 1)
x1, th1, th2 = SuperFun.x(d, 1), SuperFun.theta(d, 1), SuperFun.theta(d, 2)
for f in [SuperFun.const(d, 1), th1 * th2 - x1 * x1 * 2, x1 * x1 * th1 * th2 + x1]:
    print(f"{render_superfun(f):<28} {str(boundary_term(f)):<22} {boundary_term_direct(f)}")

# on harmonic functions only f(0) and the top coefficient at 0 matter
for f in harmonic_basis(d, 2)[:6]:
    print(f"{render_superfun(f):<28} {boundary_term(f)}")
