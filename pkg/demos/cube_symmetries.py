"""
Finding and using the symmetries of a cube
==========================================

"""

from itertools import product

from symcone.conemodel import dual_description_dd, homogenize
from symcone.orbits import fuse
from symcone.permgrp import format_cycles
from symcone.symdetect import restricted_automorphism_group

cube = homogenize(sorted(product((-1, 1), repeat=3)))

# detection builds an edge-colored graph on the rays and reads the
# linear symmetries off its automorphisms; every one is witnessed by
# an actual matrix before being believed
found = restricted_automorphism_group(cube.rays)
G = found.group
print("group order:", G.order())           # 48 = full cube symmetry
for g in G.generators:
    print("  generator", format_cycles(g))

# orbit/stabilizer bookkeeping comes from a stabilizer chain
v = 0
print("orbit of vertex 0:", G.orbit(v))
print("stabilizer of vertex 0 has order", G.point_stabilizer(v).order())

# the six facets form a single orbit under G ...
facets = dual_description_dd(cube)
db = fuse([f.support for f in facets], G)
print("facet orbits under the full group:", len(db.entries()))

# ... but three orbits under the subgroup generated by one rotation
quarter = G.point_stabilizer(0).point_stabilizer(7)  # spins the diagonal
twisted = fuse([f.support for f in facets], quarter)
print("facet orbits under a diagonal spin:",
      [e.size for e in twisted.entries()])
