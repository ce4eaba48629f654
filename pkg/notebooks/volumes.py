"""
Supersphere and superball volumes
=================================

The volume only depends on the superdimension M = m - 2n, up to the Berezin
sign and a power of 2.  It vanishes for M = 0, -2, -4, ...
"""
from supersphere import SpaceDims, SuperFun, ball_integral, ball_volume, sphere_integral, sphere_volume

print(f"{'m|2n':>6} {'M':>3}  {'vol(S)':<24} vol(B)")
for m in range(1, 6):
    for n in range(3):
        d = SpaceDims(m, n)
        print(f"{str(d):>6} {d.M:>3}  {str(sphere_volume(d)):<24} {ball_volume(d)}")

# the closed forms agree with integrating the constant 1
d = SpaceDims(3, 1)
one = SuperFun.const(d, 1)
print(sphere_integral(one), "==", sphere_volume(d))
print(ball_integral(one), "==", ball_volume(d))

# vol(B) = vol(S) L / M, and d/dL vol(B) = vol(S)
print(ball_volume(d).d_dL() == sphere_volume(d))
