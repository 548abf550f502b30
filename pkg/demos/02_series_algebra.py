"""Knot-wise algebra on compatible blendstrings.

Starting from the constant 1 and the identity z one can assemble
polynomials exactly (the Chebyshev recurrence below is reproduced to
machine precision) and rational functions approximately (division truncates
at the working grade, so each segment keeps a visible error hump).
"""

import numpy as np

from blends import Blendstring, constant_oracle, identity_oracle
from blends.blendstring import zip_with
from blends.series import combine, div, mul

knots = [-1.0, -1 / 3, 1 / 3, 1.0]
grade = 5
one = Blendstring.from_oracle(knots, grade, constant_oracle(1.0))
z = Blendstring.from_oracle(knots, grade, identity_oracle)

# Chebyshev polynomials via T_{k+1} = 2 z T_k - T_{k-1}
t_prev, t_cur = one, z
for k in range(2, 7):
    two_z_t = zip_with(z, t_cur, lambda x, y: combine(mul(x, y), mul(x, y)))
    t_prev, t_cur = t_cur, zip_with(two_z_t, t_prev, lambda x, y: combine(x, y, 1.0, -1.0))

xs = np.linspace(-1, 1, 400)
ref = np.polynomial.chebyshev.chebval(xs, [0] * 6 + [1])
err = max(abs(t_cur.eval(float(x)) - r) for x, r in zip(xs, ref))
print(f"T6 via the recurrence: max deviation from chebval = {err:.3e}")

# a rational function: (1 + z/2) / (1 - z/2)
num = zip_with(one, z, lambda x, y: combine(x, y, 1.0, 0.5))
den = zip_with(one, z, lambda x, y: combine(x, y, 1.0, -0.5))
rat = zip_with(num, den, div)

print("\n(1 + z/2)/(1 - z/2) as a grade-5 blendstring:")
print("segment             max error")
for k in range(3):
    a, b = knots[k], knots[k + 1]
    xs = np.linspace(a, b, 200)
    worst = max(abs(rat.eval(float(x)) - (1 + x / 2) / (1 - x / 2)) for x in xs)
    print(f"  [{a:+.3f}, {b:+.3f}]   {worst:.3e}")
print("the humps grow toward z = 2, the pole of the target function")
