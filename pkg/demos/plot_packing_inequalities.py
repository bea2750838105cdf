"""
Packing inequalities
====================

The Euclidean estimates on the cusp torus: tangent horocycle products,
intersection numbers against area, the straddle heights and the seen area.
"""

import math

import numpy as np

from hypants.horoball import CuspLattice, Horocycle
from hypants.packing import (
    intersection_area_bound,
    seen_area_inequality,
    shrink_expand,
    straddle_min_height,
    straddle_min_height_numeric,
    tangent_product,
)

# Moving a shared gap from one horocycle to the other keeps the product.
print(tangent_product(2, 2), tangent_product(1, 4), tangent_product(*shrink_expand(2, 2, 0.3)))

# |Delta| area <= l1 l2, with equality for orthogonal slopes
L = CuspLattice(2, 1.7j)
for s in [(1, 0), (1, 1), (2, 1)]:
    r = intersection_area_bound(Horocycle(*s, L), Horocycle(0, 1, L))
    print(s, round(r.computed["lhs"], 6), round(r.computed["rhs"], 6), r.computed["equality"])

# The two branches of the straddle height meet at a = 2 sqrt 2.
for a in np.linspace(1.5, 4, 6):
    print(f"a = {a:.2f}  closed {straddle_min_height(a):.8f}  numeric {straddle_min_height_numeric(a):.8f}")
print(straddle_min_height(2 * math.sqrt(2)), math.sqrt(2) / 2)

r = seen_area_inequality()
print("minimum of the quadratic:", r.computed["minimum"], "at", r.computed["argmin"])
