"""
Parabolic pants representations
===============================

A representation of the free group <c1, c2> in which c1, c2 and c1 c2 all go
to parabolics is either reducible or conjugate to one rigid pair.
"""

import numpy as np

from hypants import classify_pants_rep, mat
from hypants.pantsrep import RIGID_C1, reducible_rep, rigid_rep, trace_law

# The rigid pair, and the trace of C1 times a lower triangular parabolic.
print(rigid_rep())
for z in (0.0, -2.0, 0.5, 1j):
    print(f"z = {z!s:6}  tr = {trace_law(z)}")

# Only z = 0 and z = -2 give trace +-2, and z = 0 makes the second
# generator trivial, so the irreducible case is z = -2.
print(RIGID_C1 @ mat(1, 0, -2, 1))

# Hide the rigid pair behind a random conjugation and recover it.
rng = np.random.default_rng(7)
g = mat(*(rng.normal(size=4) + 1j * rng.normal(size=4)))
disguised = rigid_rep().conjugated(g)
nf = classify_pants_rep(disguised)
print(nf.kind, "residual", nf.residual)

# A pair of translations stays reducible under conjugation.
nf = classify_pants_rep(reducible_rep(1, 1j).conjugated(g))
print(nf.kind, nf.params)
