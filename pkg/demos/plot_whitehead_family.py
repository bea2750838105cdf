"""
The Whitehead link family
=========================

Q(a) = [[1/a - a, a], [-a, a]] together with the rigid pair satisfies the two
Whitehead relations for every nonzero a.  The complete structure decomposes
into tetrahedra of shapes x and -1/x.
"""

import math

import numpy as np

from hypants import build_rho, lobachevsky, tet_volume, whitehead_volume
from hypants.whitehead import index_volume_check, nr_parameter

# relation residuals across the annulus 0.1 <= |a| <= 10
rng = np.random.default_rng(3)
worst = 0.0
for r, t in zip(np.exp(rng.uniform(np.log(0.1), np.log(10), 200)), rng.uniform(-np.pi, np.pi, 200)):
    worst = max(worst, *build_rho(r * np.exp(1j * t)).relation_residuals())
print("largest relation residual:", worst)

# Lobachevsky function at a few angles
for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
    print(f"Lambda({theta:.4f}) = {lobachevsky(theta):.12f}")

# The regular tetrahedron is the largest; x = i gives half of the Whitehead volume.
print("regular:", tet_volume(np.exp(1j * math.pi / 3)))
print("square :", tet_volume(1j))
print("Whitehead volume:", whitehead_volume(1j), " z =", nr_parameter(1j).z)

# Volume along a path of shapes, peaking at x = i
for y in (0.25, 0.5, 1.0, 2.0, 4.0):
    print(f"x = {y}i   vol = {whitehead_volume(1j * y):.6f}")

# A double cover quotient would be too small.
print(index_volume_check().computed)
