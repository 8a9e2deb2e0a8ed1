"""Representation conversion by incidence and adjacency decomposition.

Both methods reduce facet enumeration of a pointed full-dimensional cone
to smaller conversion problems — vertex-figure quotients for incidence,
facet subcones for adjacency — solved recursively under the symmetry
available there, with the results fused back into orbit representatives
under the original group.  A bank caches solved subcones up to restricted
isomorphism so isomorphic subproblems are converted once.
"""

import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .conemodel import (
    Cone,
    dual_description_dd,
    facet_from_support,
    gift_wrap,
    initial_facet,
    is_pointed,
    make_cone,
    make_facet,
    restrict_to_span,
)
from .exactlin import integer_primitive, is_redundant_generator, rank
from .orbits import OrbitDatabase, fuse
from .permgrp import PermGroup, format_cycles
from .symdetect import (
    build_colored_graph,
    permutation_witness,
    restricted_automorphism_group,
    restricted_isomorphism,
)


class ConversionDepthError(Exception):
    """Recursion bottomed out before any base case applied."""

    def __init__(self, cone, depth):
        super().__init__(
            "recursion depth %d exhausted on a %d-dimensional subcone "
            "with %d rays" % (depth, cone.dim, cone.nrays))
        self.cone = cone


@dataclass
class RecursionPolicy:
    max_depth: int = 16
    base_threshold: int = 8
    order_by_incidence: bool = True


@dataclass
class ConversionTask:
    """One conversion problem: a cone, a group acting on its rays, knobs.

    ``method`` is a name from {incidence, adjacency, cascade, pivot,
    direct} or a sequence of names indexed by recursion depth (the last
    entry repeats).  With ``trust_group`` the generators are taken as
    face-lattice symmetries without a witness check; color-based bucket
    keys are then disabled and incidence decomposition is unavailable.
    """

    cone: Cone
    group: PermGroup
    method: object = "adjacency"
    policy: RecursionPolicy = field(default_factory=RecursionPolicy)
    bank: object = None
    balinski: bool = True
    threads: int = 1
    trust_group: bool = False


def order_by_incidence_number(faces):
    """Stable ascending sort by support size (easy faces first)."""
    return sorted(faces, key=len)


def balinski_skip(open_orbits, dim):
    """Whether the remaining open orbits cannot hide undiscovered facets.

    The facet adjacency graph of a d-dimensional pointed cone stays
    connected after removing any d-2 vertices, so once fewer than d-1
    facets sit in unexpanded orbits, every other facet is already
    discovered.  Callers must have expanded at least one facet fully:
    the walk from an expanded facet to a hypothetical missing one is
    what the deleted vertices would otherwise have to cut.
    """
    return sum(size for _, size in open_orbits) < dim - 1


def verify_group_action(cone, group):
    """Check every generator is realized by a matrix on the rays."""
    if group.degree != cone.nrays:
        raise ValueError("group degree does not match the number of rays")
    for g in group.generators:
        if permutation_witness(cone.rays, g) is None:
            raise ValueError(
                "generator %s is not a restricted automorphism; pass it "
                "as trusted if it is a known combinatorial symmetry"
                % format_cycles(g))


# ---------------------------------------------------------------------------
# Banking of solved subcones.


def family_fingerprint(rows):
    """Restricted-isomorphism invariant of a spanning vector family."""
    g = build_colored_graph(rows)
    verts = tuple(sorted(g.palette[c] for c in g.vertex_colors))
    edges = tuple(sorted(g.palette[g.edge(i, j)]
                         for i in range(g.n) for j in range(i + 1, g.n)))
    return (g.n, len(rows[0]), verts, edges)


@dataclass(frozen=True)
class BankEntry:
    fingerprint: tuple
    rays: tuple
    facet_orbit_reps: tuple
    group: PermGroup


class Bank:
    """Solved subcones keyed by fingerprint, matched up to isomorphism."""

    def __init__(self):
        self.buckets = {}
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()


def bank_lookup(bank, cone):
    """(entry, vertex bijection, witness matrix) for an isomorphic stored
    cone, or None."""
    fp = family_fingerprint(cone.rays)
    with bank._lock:
        candidates = list(bank.buckets.get(fp, ()))
    for entry in candidates:
        iso = restricted_isomorphism(entry.rays, cone.rays)
        if iso is not None:
            with bank._lock:
                bank.hits += 1
            return entry, iso[0], iso[1]
    with bank._lock:
        bank.misses += 1
    return None


def bank_store(bank, entry):
    """Add an entry unless an isomorphic cone is already stored."""
    with bank._lock:
        candidates = list(bank.buckets.get(entry.fingerprint, ()))
    for stored in candidates:
        if restricted_isomorphism(stored.rays, entry.rays) is not None:
            return
    with bank._lock:
        bank.buckets.setdefault(entry.fingerprint, []).append(entry)


# ---------------------------------------------------------------------------
# Shared subproblem machinery.


def _reps_to_facets(cone, supports):
    facets = [facet_from_support(cone, s) for s in supports]
    return sorted(facets, key=lambda f: f.normal)


def _direct_reps(cone, group, trusted):
    facets = dual_description_dd(cone, check_pointed=False)
    graph = None if trusted else build_colored_graph(cone.rays)
    db = OrbitDatabase(group, rays=cone.rays, graph=graph)
    for f in facets:
        db.insert_if_new(f.support)
    return _reps_to_facets(cone, db.representatives())


def _image_on_positions(perms, positions):
    pos = {p: k for k, p in enumerate(positions)}
    return [tuple(pos[g[p]] for p in positions) for g in perms]


def _split_reps(big, sub, supports):
    if big.order() == sub.order():
        return list(supports)
    out = []
    for s in supports:
        out.extend(big.double_coset_split(sub, s))
    return out


def _facets_under(cone, group, task, depth):
    """Facet supports of a subcone, as orbit representatives under group.

    Solves under the group enlarged by the subcone's own restricted
    automorphisms, consults the bank first, and splits the answer back
    into orbits of the requested (smaller) group.
    """
    if task.bank is not None:
        hit = bank_lookup(task.bank, cone)
        if hit is not None:
            entry, sigma, _ = hit
            moved = [tuple(sorted(sigma[i] for i in sup))
                     for sup in entry.facet_orbit_reps]
            for s in moved:
                facet_from_support(cone, s)  # transported facets stay exact
            aut_here = entry.group.conjugate(sigma)
            if aut_here.contains_group(group):
                return _split_reps(aut_here, group, moved)
            big = PermGroup(cone.nrays,
                            list(aut_here.generators) + list(group.generators))
            merged = fuse(moved, big, rays=cone.rays).representatives()
            return _split_reps(big, group, merged)

    aut = restricted_automorphism_group(cone.rays).group
    if aut.contains_group(group):
        big = aut
    else:
        big = PermGroup(cone.nrays,
                        list(aut.generators) + list(group.generators))
    sub_task = ConversionTask(
        cone, big, method=task.method, policy=task.policy, bank=task.bank,
        balinski=task.balinski, threads=1, trust_group=task.trust_group)
    reps_big = [f.support for f in recursive_convert(sub_task, depth)]

    if task.bank is not None:
        aut_reps = _split_reps(big, aut, reps_big)
        bank_store(task.bank, BankEntry(
            family_fingerprint(cone.rays), cone.rays, tuple(aut_reps), aut))
    return _split_reps(big, group, reps_big)


def _facet_subproblem_ridges(task, facet, depth):
    """Ridges inside a facet, one per orbit of the facet's stabilizer."""
    cone, group = task.cone, task.group
    support = facet.support
    proj, _cols = restrict_to_span([cone.rays[i] for i in support])
    sub = make_cone(proj)
    stab = group.set_stabilizer(support)
    image = PermGroup(len(support),
                      _image_on_positions(stab.generators, support))
    local = _facets_under(sub, image, task, depth)
    return sorted(tuple(sorted(support[k] for k in s)) for s in local)


# ---------------------------------------------------------------------------
# Incidence decomposition.


def _quotient_extremes(cone, r):
    """Extreme directions of the cone's image modulo the ray r.

    Returns (directions, pivot coordinate, per-ray direction index or
    None for rays projecting to zero or to a redundant direction).
    """
    v = cone.rays[r]
    k = next(i for i, x in enumerate(v) if x)
    keep = [c for c in range(cone.dim) if c != k]
    dir_of = []
    for w in cone.rays:
        img = tuple(w[c] - w[k] * v[c] / v[k] for c in keep)
        dir_of.append(integer_primitive(img) if any(img) else None)
    dirs = sorted(set(d for d in dir_of if d is not None))
    i = 0
    while i < len(dirs):
        if is_redundant_generator(dirs, i):
            dirs.pop(i)
        else:
            i += 1
    index = {d: m for m, d in enumerate(dirs)}
    dir_idx = [None if d is None else index.get(d) for d in dir_of]
    return tuple(dirs), k, dir_idx


def _induced_group(stab, dir_idx, m):
    """Action of a ray stabilizer on the quotient's extreme directions."""
    gens = []
    for g in stab.generators:
        phi = [None] * m
        for j, di in enumerate(dir_idx):
            if di is None:
                continue
            ti = dir_idx[g[j]]
            assert ti is not None, "symmetry maps an extreme direction out"
            if phi[di] is None:
                phi[di] = ti
            else:
                assert phi[di] == ti, "inconsistent action on directions"
        assert None not in phi
        gens.append(tuple(phi))
    return PermGroup(m, gens)


def _lift_quotient_normal(cone, r, pivot, normal):
    """Pull a facet normal of the quotient back to one vanishing on ray r."""
    v = cone.rays[r]
    keep = [c for c in range(cone.dim) if c != pivot]
    f = [Fraction(0)] * cone.dim
    for g, c in zip(normal, keep):
        f[c] = Fraction(g)
    f[pivot] = -sum(f[c] * v[c] for c in keep) / v[pivot]
    return tuple(f)


def incidence_decomposition(task, depth=0):
    """Facet orbit representatives via vertex-figure subproblems.

    For one ray per orbit, the facets through it are the facets of the
    quotient cone modulo that ray; those are found recursively and the
    per-ray lists fused under the full group.
    """
    if task.trust_group:
        raise ValueError(
            "incidence decomposition requires verified restricted "
            "generators (the quotient step transports matrices)")
    cone, group = task.cone, task.group
    graph = build_colored_graph(cone.rays)
    db = OrbitDatabase(group, rays=cone.rays, graph=graph)
    ray_reps = sorted({group.canonical_representative((i,))[0]
                       for i in range(cone.nrays)})
    for r in ray_reps:
        dirs, pivot, dir_idx = _quotient_extremes(cone, r)
        sub = make_cone(dirs)
        induced = _induced_group(group.stabilizer_of_point(r), dir_idx,
                                 len(dirs))
        for sup in _facets_under(sub, induced, task, depth + 1):
            g = facet_from_support(sub, sup).normal
            lifted = make_facet(cone.rays,
                                _lift_quotient_normal(cone, r, pivot, g))
            db.insert_if_new(lifted.support)
    return _reps_to_facets(cone, db.representatives())


# ---------------------------------------------------------------------------
# Adjacency decomposition.


def adjacency_decomposition(task, depth=0):
    """Facet orbit representatives via gift-wrapping across ridges.

    Starting from one facet, repeatedly picks an open orbit, enumerates
    the ridges of its representative up to the facet stabilizer, and
    wraps across each ridge to discover neighboring facets; stops when
    every orbit is closed or too few facets remain open to hide more.
    """
    cone, group = task.cone, task.group
    dim = cone.dim
    graph = None if task.trust_group else build_colored_graph(cone.rays)
    db = OrbitDatabase(group, rays=cone.rays, graph=graph)
    arrival = {}
    sched = threading.Lock()
    failure = []

    def record(support):
        with sched:
            new, rep = db.insert_if_new(support)
            if new:
                arrival[rep] = len(arrival)
        return rep

    record(initial_facet(cone).support)

    def claim():
        with sched:
            if failure:
                return "done"
            entries = db.entries()
            open_entries = [e for e in entries if e.status == "open"]
            pending = [(e.representative, e.size) for e in entries
                       if e.status in ("open", "claimed")]
            anchored = any(e.status == "closed" for e in entries)
            if not open_entries:
                return "wait" if pending else "done"
            if task.balinski and anchored and balinski_skip(pending, dim):
                for e in open_entries:
                    e.status = "closed"
                claimed_left = any(e.status == "claimed" for e in entries)
                return "wait" if claimed_left else "done"
            if task.policy.order_by_incidence:
                pick = min(open_entries,
                           key=lambda e: (len(e.representative),
                                          arrival[e.representative]))
            else:
                pick = min(open_entries,
                           key=lambda e: arrival[e.representative])
            pick.status = "claimed"
            return pick

    def work(entry):
        facet = facet_from_support(cone, entry.representative)
        for ridge in _facet_subproblem_ridges(task, facet, depth + 1):
            record(gift_wrap(cone, facet, ridge).support)
        with sched:
            entry.status = "closed"

    def run():
        while True:
            got = claim()
            if got == "done":
                return
            if got == "wait":
                time.sleep(0.001)
                continue
            try:
                work(got)
            except BaseException as exc:
                with sched:
                    failure.append(exc)
                raise

    if task.threads <= 1:
        run()
    else:
        workers = [threading.Thread(target=run)
                   for _ in range(task.threads)]
        for t in workers:
            t.start()
        for t in workers:
            t.join()
        if failure:
            raise failure[0]
    return _reps_to_facets(cone, db.representatives())


# ---------------------------------------------------------------------------
# Dispatch.


def _method_at(method, depth):
    if isinstance(method, str):
        return method
    seq = tuple(method)
    return seq[min(depth, len(seq) - 1)]


def recursive_convert(task, depth=0):
    """Dispatch one conversion level: direct solve below the threshold,
    otherwise the configured decomposition method for this depth."""
    cone = task.cone
    method = _method_at(task.method, depth)
    if (method == "direct" or cone.dim <= 2
            or cone.nrays <= task.policy.base_threshold):
        return _direct_reps(cone, task.group, task.trust_group)
    if depth >= task.policy.max_depth:
        raise ConversionDepthError(cone, depth)
    if method == "incidence":
        return incidence_decomposition(task, depth)
    if method == "adjacency":
        return adjacency_decomposition(task, depth)
    if method == "cascade":
        if task.trust_group:
            raise ValueError("trusted symmetries do not act on the "
                             "lifted projections the cascade walks")
        from .cascade import cascade_facet_orbits
        return cascade_facet_orbits(task.cone, task.group)
    if method == "pivot":
        if task.trust_group:
            raise ValueError("trusted symmetries need not preserve linear "
                             "dependence, so they do not act on the basis "
                             "graph")
        from .pivotsym import pivot_facet_orbits
        return pivot_facet_orbits(task.cone, task.group)
    raise ValueError("unknown method %r" % (method,))


def convert(task):
    """Orbit representatives of all facets of the task's cone.

    The cone must be pointed and full-dimensional (reduce first); the
    group is witness-verified unless marked trusted.
    """
    cone = task.cone
    if rank(cone.rays) != cone.dim:
        raise ValueError("cone is not full-dimensional; reduce it first")
    if not is_pointed(cone):
        raise ValueError("cone is not pointed; reduce it first")
    if not task.trust_group:
        verify_group_action(cone, task.group)
    elif task.group.degree != cone.nrays:
        raise ValueError("group degree does not match the number of rays")
    return recursive_convert(task, 0)


def expand_orbits(cone, group, facets):
    """All facets obtained by letting the group act on representatives."""
    supports = set()
    for f in facets:
        supports.update(group.orbit_of_set(f.support))
    return _reps_to_facets(cone, sorted(supports))
