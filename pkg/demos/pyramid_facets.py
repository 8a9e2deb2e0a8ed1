"""
Facets of a square pyramid, up to symmetry
==========================================

"""

from symcone.conemodel import dual_description_dd, homogenize
from symcone.decomp import ConversionTask, convert, expand_orbits
from symcone.symdetect import restricted_automorphism_group

# five vertices: a unit square and an apex above its center
pyramid = homogenize([(1, 1, 0), (1, -1, 0), (-1, 1, 0), (-1, -1, 0),
                      (0, 0, 2)])
print("cone over the pyramid:", pyramid.nrays, "rays in dimension",
      pyramid.dim)

# the linear symmetries that permute the vertices (dihedral, order 8)
found = restricted_automorphism_group(pyramid.rays)
print("symmetry group order:", found.group.order())

# one representative facet per orbit; adjacency decomposition by default
reps = convert(ConversionTask(pyramid, found.group))
for f in reps:
    print("orbit rep: normal", f.normal, " touches vertices", f.support)

# letting the group act recovers the full facet list
everything = expand_orbits(pyramid, found.group, reps)
print("expanded:", len(reps), "orbits ->", len(everything), "facets")

# ... which matches plain double description with no symmetry at all
plain = dual_description_dd(pyramid)
assert sorted(f.normal for f in everything) == \
    sorted(f.normal for f in plain)
print("agrees with the direct computation")
