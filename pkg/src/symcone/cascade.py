"""Symmetric Fourier-Motzkin elimination from a simplicial lift.

A pointed full-dimensional cone with n generators is the projection of
a simplicial cone in R^n: keep a basis of d generators as they are and
tag each remaining generator with its own fresh unit coordinate.
Eliminating the tag coordinates one at a time walks back down to the
input cone; at every intermediate projection the facet list is carried
as orbit representatives under the setwise stabilizer of the rays that
are still tagged, and each elimination converts the orbits through the
common subgroup of two consecutive stabilizers.

A single elimination is a double-description section step on the polar
side: facets whose eliminated coefficient is zero survive unchanged,
and each adjacent pair with opposite signs there contributes the
combination cancelling that coefficient.  Adjacency of two facets is
decided by the rank of the generators they share, which keeps the
redundant inequalities of plain Fourier-Motzkin from ever appearing.
"""

from dataclasses import dataclass

from .conemodel import facet_from_support, make_cone
from .exactlin import dot, integer_primitive, kernel_basis, lex_independent_rows, rank, vadd, vscale
from .orbits import OrbitDatabase
from .permgrp import PermGroup, pinv
from .symdetect import build_colored_graph


@dataclass
class CascadeState:
    """Facet orbits of one intermediate projection.

    ``i`` is the ambient dimension of the current projection, falling
    from n to the target dimension ``d``.  ``rays`` holds all n
    generators projected to R^i (later ones may be redundant there) and
    ``group`` is the induced symmetry group at this step: the setwise
    stabilizer, inside the full group, of the still-tagged indices
    d..i-1.  ``facets`` are (support, normal) orbit representatives
    under it, supports indexing all n rays.
    """

    i: int
    d: int
    rays: tuple
    group: PermGroup
    facets: tuple
    full_group: PermGroup
    ridges: tuple = None


def simplicial_lift(cone, order=None):
    """(simplicial cone in R^n, ray order) projecting back onto ``cone``.

    Row k of the lift is ray ``order[k]`` padded with zeros, plus the
    unit tag e_k for k >= dim.  The default order keeps the original
    one when the first dim rays are independent and otherwise moves the
    lexically first independent subset to the front.
    """
    n, d = cone.nrays, cone.dim
    if order is None:
        basis = lex_independent_rows(cone.rays, want=d)
        if len(basis) < d:
            raise ValueError("rays do not span the space")
        rest = [j for j in range(n) if j not in set(basis)]
        order = tuple(basis) + tuple(rest)
    else:
        order = tuple(order)
        if sorted(order) != list(range(n)):
            raise ValueError("order is not a permutation of the rays")
        if rank([cone.rays[j] for j in order[:d]]) != d:
            raise ValueError("the first %d rays of the order are "
                             "dependent" % d)
    zero = (0,) * (n - d)
    rows = []
    for k, j in enumerate(order):
        tag = zero if k < d else tuple(
            1 if c == k - d else 0 for c in range(n - d))
        rows.append(tuple(cone.rays[j]) + tag)
    return make_cone(rows), order


def greedy_stabilizer_order(cone, group):
    """Ray order whose tag prefixes keep large setwise stabilizers.

    Picks the tagged rays one at a time, always the candidate whose
    addition to the tag set leaves the stabilizer as large as possible
    (ties to the smallest index), subject to the untagged remainder
    still containing a basis.  The first pick is the tag eliminated
    last, where the stabilizer matters most.
    """
    n, d = cone.nrays, cone.dim
    pool = set(range(n))
    tags = []
    for _ in range(n - d):
        best = None
        for c in sorted(pool):
            if rank([cone.rays[j] for j in pool if j != c]) != d:
                continue
            size = group.set_stabilizer(tags + [c]).order()
            if best is None or size > best[0]:
                best = (size, c)
        if best is None:
            raise ValueError("rays do not span the space")
        tags.append(best[1])
        pool.discard(best[1])
    return tuple(sorted(pool)) + tuple(tags)


def _oriented_entry(rays, normal):
    """(support, primitive normal) with the sign fixed on the rays."""
    f = integer_primitive(normal)
    products = [dot(f, w) for w in rays]
    flip = next((t for t in products if t), 0) < 0
    if flip:
        f = tuple(-x for x in f)
        products = [-t for t in products]
    support = []
    for j, t in enumerate(products):
        if t == 0:
            support.append(j)
        elif t < 0:
            raise ValueError("inequality is invalid on generator %d" % j)
    return tuple(support), f


def _entry_from_support(rays, dim, support):
    ker = kernel_basis([rays[j] for j in support], ncols=dim)
    if len(ker) != 1:
        raise ValueError("support does not span a facet hyperplane")
    return _oriented_entry(rays, ker[0])


def _orbit_database(group, rays):
    return OrbitDatabase(group, rays=rays, graph=build_colored_graph(rays))


def _state_facets(state_rays, dim, db):
    return tuple((s, _entry_from_support(state_rays, dim, s)[1])
                 for s in db.representatives())


def initial_state(lifted, group, d):
    """Cascade start: the lift is a simplex, so its facets are the
    complements of single rays."""
    n = lifted.nrays
    gi = group.set_stabilizer(range(d, n))
    db = _orbit_database(gi, lifted.rays)
    everything = range(n)
    for j in everything:
        db.insert_if_new(tuple(k for k in everything if k != j))
    return CascadeState(n, d, lifted.rays, gi,
                        _state_facets(lifted.rays, n, db), group)


def project_step(state):
    """The state one projection down: coordinate i-1 eliminated.

    Orbits travel G_i -> H -> G_{i-1} where H stabilizes the tag being
    removed: H is the largest group acting linearly on both
    projections, so representatives are first split down to it and the
    step's results fused under the next stabilizer.
    """
    i, d = state.i, state.d
    assert i > d, "already at the target dimension"
    h = state.group.set_stabilizer([i - 1])
    g_next = state.full_group.set_stabilizer(range(d, i - 1))
    new_rays = tuple(w[:-1] for w in state.rays)

    zero, pos, neg = [], [], []
    for support, _ in state.facets:
        for s in state.group.double_coset_split(h, support):
            entry = _entry_from_support(state.rays, i, s)
            coeff = entry[1][-1]
            (zero if coeff == 0 else pos if coeff > 0 else neg).append(entry)

    neg_all = []
    for support, _ in neg:
        for s in h.orbit_of_set(support):
            neg_all.append(_entry_from_support(state.rays, i, s))

    db = _orbit_database(g_next, new_rays)
    for support, normal in zero:
        db.insert_if_new(_oriented_entry(new_rays, normal[:-1])[0])
    for sup_f, f in pos:
        set_f = set(sup_f)
        for sup_g, g in neg_all:
            common = sorted(set_f & set(sup_g))
            if len(common) < i - 2:
                continue
            if rank([state.rays[j] for j in common]) != i - 2:
                continue
            combo = vadd(vscale(-g[-1], f), vscale(f[-1], g))
            assert combo[-1] == 0
            db.insert_if_new(_oriented_entry(new_rays, combo[:-1])[0])
    return CascadeState(i - 1, d, new_rays, g_next,
                        _state_facets(new_rays, i - 1, db),
                        state.full_group)


def state_ridges(state):
    """Ridge-orbit representatives of the current projection (cached).

    Ridges are recomputed from facet pairs sharing generators of rank
    i-2; every ridge lies on exactly two facets, so pairing each facet
    representative against the full expanded list finds them all.
    """
    if state.ridges is None:
        db = _orbit_database(state.group, state.rays)
        expanded = set()
        for support, _ in state.facets:
            expanded.update(state.group.orbit_of_set(support))
        for support, _ in state.facets:
            set_f = set(support)
            for other in expanded:
                if other == support:
                    continue
                common = sorted(set_f & set(other))
                if len(common) >= state.i - 2 and rank(
                        [state.rays[j] for j in common]) == state.i - 2:
                    db.insert_if_new(common)
        state.ridges = tuple(db.representatives())
    return state.ridges


def cascade_states(cone, group, order=None):
    """Yield (order, state) pairs from the simplicial lift down to the
    input cone; indices inside the states are relabelled by the order
    used for the lift."""
    if order is None:
        order = greedy_stabilizer_order(cone, group)
    lifted, order = simplicial_lift(cone, order)
    state = initial_state(lifted, group.conjugate(pinv(order)), cone.dim)
    yield order, state
    while state.i > cone.dim:
        state = project_step(state)
        yield order, state


def cascade_facet_orbits(cone, group, order=None):
    """Facet orbit representatives of the cone via the full cascade."""
    for order, state in cascade_states(cone, group, order):
        pass
    facets = [facet_from_support(cone, tuple(sorted(order[k] for k in s)))
              for s, _ in state.facets]
    return sorted(facets, key=lambda f: f.normal)


def cascade_convert(task, order=None):
    """Facet orbit representatives for a conversion task.

    The group must act by witnessed linear symmetries: trusted
    combinatorial generators have no matrices to carry onto the lifted
    projections.
    """
    if task.trust_group:
        raise ValueError("trusted symmetries do not act on the lifted "
                         "projections; use adjacency decomposition")
    if task.group.degree != task.cone.nrays:
        raise ValueError("group degree does not match the number of rays")
    return cascade_facet_orbits(task.cone, task.group, order)
