"""
Horoballs seen from infinity
============================

Enumerate the images of the horoball at infinity under the rigid pants group
and draw the ones larger than a cutoff.
"""

from hypants import maximal_cusp_height, orbit_enumerate, rigid_group
from hypants.svg import render_diagram

G = rigid_group()
balls = orbit_enumerate(G, cutoff=0.01, max_word_len=12)
for B in balls[:10]:
    print(B.center.to_json(), B.size)
print(len(balls), "balls")

# Expanding the cusp until the top ball touches its first image
h = maximal_cusp_height(G)
print("maximal height", h.height, "reached by", "".join(h.word))

# At that height the full-sized balls have diameter equal to the height.
full = orbit_enumerate(G, cutoff=0.4, max_word_len=8, height=h.height)
print([(B.center.to_json(), B.size) for B in full])

render_diagram(balls, G.lattice, "rigid_orbit.svg")
print("wrote rigid_orbit.svg")
