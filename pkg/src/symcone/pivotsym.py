"""Facet enumeration by simplex pivoting over (d-1)-bases up to symmetry.

A (d-1)-basis is a set of d-1 generators spanning the hyperplane of a
facet.  With the interior point c = sum of all generators fixed, facet
normals scaled to <y, c> = 1 are the vertices of a bounded section of
the polar cone, and releasing one basis element walks an edge of that
section until the next inequality blocks: the exact minimum-ratio test
of the simplex method.  A depth-first search of this pivot graph,
deduplicated through the orbit database, visits every basis orbit and
therefore every facet orbit.

Degenerate facets carry many bases.  An orbitwise lexicographic
perturbation slides each generator orbit of a subgroup H along c by
its own infinitesimal, v_i + sigma_j eps_j c with 1 >> eps_1 >> ... >>
eps_k > 0, which H still permutes.  On the section only the right-hand
side picks up the epsilons, so slacks become tuples of rationals
compared lexicographically and the geometry stays exact rational.  The
perturbed boundary subdivides the original one; mapping each perturbed
basis to the original facet it spans recovers the coarse facet list.

Facet copies reached repeatedly through symmetric neighbours are cut
off by the pruning filter: only the first-discovered copy of each
facet orbit has its bases expanded, and bases met inside other copies
are set aside, to be expanded only if their orbit never shows up in a
first-discovered facet.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from .conemodel import (
    boundary_complex_refines,
    dual_description_dd,
    facet_from_support,
    homogenize,
    initial_facet,
    is_pointed,
    make_cone,
    make_facet,
)
from .exactlin import LexVal, dot, inverse, kernel_basis, rank, vfrac
from .orbits import OrbitDatabase, fuse
from .permgrp import PermGroup, pid, pmul
from .symdetect import build_colored_graph, permutation_witness, restricted_automorphism_group


# ---------------------------------------------------------------------------
# Bases.


@dataclass(eq=False)
class BasisNode:
    """d-1 generator indices spanning the hyperplane of ``facet``.

    ``known`` is set when the node came off the stack with its orbit
    already on record; ``explored`` once its pivots were expanded.
    """

    indices: tuple
    facet: object
    explored: bool = False
    known: bool = False


def make_basis(cone, indices):
    """BasisNode over the given ray indices, or ValueError.

    The indices must be dim-1 independent rays whose span supports the
    cone; the spanned facet is reconstructed exactly.
    """
    idx = tuple(sorted(set(indices)))
    if len(idx) != cone.dim - 1:
        raise ValueError("a basis takes exactly dim-1 ray indices")
    rows = [cone.rays[i] for i in idx]
    ker = kernel_basis(rows, ncols=cone.dim)
    if len(ker) != 1:
        raise ValueError("basis rays are linearly dependent")
    normal = ker[0]
    for v in cone.rays:
        t = dot(normal, v)
        if t:
            if t < 0:
                normal = tuple(-x for x in normal)
            break
    if any(dot(normal, v) < 0 for v in cone.rays):
        raise ValueError("basis span does not support the cone")
    return BasisNode(idx, make_facet(cone.rays, normal))


# ---------------------------------------------------------------------------
# Orbitwise perturbation.


@dataclass(frozen=True)
class PerturbationSpec:
    """Who moves, in which order, and which way.

    ``orbits`` is the orbit partition of the generator indices under
    ``subgroup`` (each orbit sorted, listed by smallest member) and
    ``order`` a permutation of the orbit labels: the orbit order[j] is
    perturbed by eps_{j+1}, earlier listed means larger infinitesimal.
    ``signs`` aligns with ``orbits``: +1 pushes the orbit toward the
    interior point, -1 pulls it outward.
    """

    subgroup: PermGroup
    orbits: tuple
    order: tuple
    signs: tuple


def generator_orbits(group):
    """Orbits on generator indices, each sorted, listed by smallest member."""
    seen = set()
    out = []
    for i in range(group.degree):
        if i in seen:
            continue
        pts = tuple(t[0] for t in group.orbit_of_set((i,)))
        seen.update(pts)
        out.append(pts)
    return tuple(out)


def make_perturbation_spec(subgroup, signs=None, order=None):
    """PerturbationSpec with the default choices filled in.

    By default every orbit is pulled and the perturbation order is the
    listing order (smallest member first).  ``signs`` may be one value
    for all orbits or a sequence aligned with the orbit listing.
    """
    orbits = generator_orbits(subgroup)
    k = len(orbits)
    if order is None:
        order = tuple(range(k))
    order = tuple(order)
    if sorted(order) != list(range(k)):
        raise ValueError("order must be a permutation of the orbit labels")
    if signs is None:
        signs = -1
    if signs in (1, -1):
        signs = (signs,) * k
    signs = tuple(signs)
    if len(signs) != k or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1, one per orbit")
    return PerturbationSpec(subgroup, orbits, order, signs)


@dataclass(frozen=True)
class SymbolicRHS:
    """Right-hand side base + N (eps_1 .. eps_k)^t of the section.

    Row i gives the offset of generator i's inequality <v_i, y> >=
    base_i + sum_j N_ij eps_j; on the interior-point section the base
    offsets are all zero and column j of N is -sigma on the orbit
    perturbed by eps_{j+1}.  ``vacuous`` flags a single-orbit spec,
    which shifts every generator equally and removes no degeneracy.
    """

    base: tuple
    eps_matrix: tuple
    spec: object
    vacuous: bool


def build_perturbation(cone, spec):
    """SymbolicRHS for the cone under the given perturbation spec.

    Verifies that the subgroup really permutes the generator family
    linearly (witness per generator) and that the declared orbit
    partition is the subgroup's own.
    """
    sub = spec.subgroup
    if sub.degree != cone.nrays:
        raise ValueError("subgroup degree differs from the generator count")
    for g in sub.generators:
        if permutation_witness(cone.rays, g) is None:
            raise ValueError("subgroup is not made of restricted "
                             "automorphisms of the generator family")
    if generator_orbits(sub) != spec.orbits:
        raise ValueError("orbit partition is not the subgroup's")
    k = len(spec.orbits)
    rows = [[Fraction(0)] * k for _ in range(cone.nrays)]
    for j, label in enumerate(spec.order):
        for i in spec.orbits[label]:
            rows[i][j] = Fraction(-spec.signs[label])
    return SymbolicRHS(
        base=(Fraction(0),) * cone.nrays,
        eps_matrix=tuple(tuple(r) for r in rows),
        spec=spec,
        vacuous=k < 2,
    )


# ---------------------------------------------------------------------------
# The pivot step.


def _section_functional(cone):
    """c = sum of all generators: interior, fixed by every symmetry."""
    return tuple(sum(col, Fraction(0)) for col in zip(*cone.rays))


def _null_rhs(n):
    return SymbolicRHS((Fraction(0),) * n, ((),) * n, None, True)


def _basis_system(cone, idx, rhs, c):
    """Slacks and edge directions of one basis on the section.

    Inverts M = [rows of idx; c] once: the symbolic vertex solves
    M y = [offsets; 1] column by column and the direction releasing
    row idx[t] is column t of the inverse.  Returns (slacks, dirs)
    with one LexVal slack of width k+1 per generator; ValueError when
    the span passes through c (never, for a supporting basis).
    """
    minv = inverse([cone.rays[i] for i in idx] + [c])
    cols = tuple(zip(*minv))
    k = len(rhs.eps_matrix[0]) if rhs.eps_matrix else 0
    moff = [rhs.eps_matrix[i] for i in idx]
    ys = [cols[-1]]  # rational part: offsets 0, section value 1
    for m in range(k):
        ys.append(tuple(
            sum((moff[t][m] * cols[t][a] for t in range(len(idx))),
                Fraction(0))
            for a in range(cone.dim)))
    slacks = []
    for i, v in enumerate(cone.rays):
        parts = [dot(v, ys[0]) - rhs.base[i]]
        parts.extend(dot(v, ys[m + 1]) - rhs.eps_matrix[i][m]
                     for m in range(k))
        slacks.append(LexVal(parts))
    return slacks, cols[:-1]


def pivot(cone, basis, leaving, perturb=None):
    """The adjacent basis reached by releasing ``leaving``.

    Walks from the basis's section vertex along the edge that keeps
    the other d-2 rows tight until the first inequality blocks; that
    generator enters.  Ratio ties are compared lexicographically
    through the perturbation columns, and whatever still ties is
    broken by lowest ray index.
    """
    idx = basis.indices
    if leaving not in idx:
        raise ValueError("leaving index is not in the basis")
    rhs = _null_rhs(cone.nrays) if perturb is None else perturb
    slacks, dirs = _basis_system(cone, idx, rhs, _section_functional(cone))
    w = dirs[idx.index(leaving)]
    inside = set(idx)
    best = enter = None
    for j, vj in enumerate(cone.rays):
        if j in inside:
            continue
        a = dot(vj, w)
        if a >= 0:
            continue
        t = slacks[j] / -a
        if best is None or t < best:
            best, enter = t, j
    assert enter is not None, "unblocked edge on a bounded section"
    return make_basis(cone, [e for e in idx if e != leaving] + [enter])


# ---------------------------------------------------------------------------
# Depth-first search of the pivot graph up to symmetry.


class FacetRegister(OrbitDatabase):
    """Facet-support orbits that remember each orbit's first copy."""

    def __init__(self, group, rays=None, graph=None):
        super().__init__(group, rays=rays, graph=graph)
        self.first_copy = {}

    def record(self, support):
        new, rep = self.insert_if_new(support)
        if new:
            self.first_copy[rep] = tuple(support)
        return new, rep


def adjacency_pruning_filter(basis, facet, db):
    """Whether to expand ``basis``: yes unless its facet's orbit is on
    record and this copy is not the first-discovered one.

    Pruned bases still count as orbit representatives; the caller
    keeps them aside and expands them later only if their orbit never
    turns up inside a first-discovered facet copy.
    """
    new, rep = db.record(tuple(facet.support))
    return new or db.first_copy[rep] == tuple(facet.support)


def _start_basis(cone, rhs):
    """A valid (perturbed) basis inside the seed facet.

    The perturbed boundary subdivides the original one, so some
    perturbed facet lies in the seed facet, and its spanning index
    sets are independent already unperturbed; scanning the support
    finds one.
    """
    fac = initial_facet(cone)
    d = cone.dim
    c = _section_functional(cone)
    for comb in combinations(fac.support, d - 1):
        if rank([cone.rays[i] for i in comb]) != d - 1:
            continue
        if rhs is None:
            return make_basis(cone, comb)
        slacks, _ = _basis_system(cone, comb, rhs, c)
        if all(s >= 0 for s in slacks):
            return make_basis(cone, comb)
    raise AssertionError("no valid basis inside the seed facet")


def _neighbors(cone, idx, slacks, dirs):
    """Index sets of every basis sharing d-2 indices with ``idx``.

    Per leaving index: generators tight on the same (perturbed)
    hyperplane exchange in whenever their coefficient on the released
    row is nonzero, and when no tight generator blocks the edge at
    zero, the minimum-ratio arrivals enter.  The ratio-test arrival
    alone provably misses orbits on degenerate cones; the tight
    exchanges close the gap, since basis exchange connects all
    spanning subsets of a facet's support.
    """
    out = []
    inside = set(idx)
    for t, l in enumerate(idx):
        w = dirs[t]
        rest = tuple(e for e in idx if e != l)
        best = None
        hits = []
        blocked = False
        for j, vj in enumerate(cone.rays):
            if j in inside:
                continue
            a = dot(vj, w)
            if not slacks[j]:
                if a:
                    out.append(tuple(sorted(rest + (j,))))
                    blocked = blocked or a < 0
                continue
            if a >= 0:
                continue
            tj = slacks[j] / -a
            if best is None or tj < best:
                best, hits = tj, [j]
            elif tj == best:
                hits.append(j)
        if not blocked:
            assert hits, "unblocked edge on a bounded section"
            out.extend(tuple(sorted(rest + (j,))) for j in hits)
    return out


def _explore(cone, group, spec=None, prune=True, stats=None):
    """Core search; ``group`` fuses the facet output at the end."""
    if rank(cone.rays) != cone.dim:
        raise ValueError("the basis walk needs a full-dimensional cone")
    if not is_pointed(cone):
        raise ValueError("the basis walk needs a pointed cone")
    rhs = None if spec is None else build_perturbation(cone, spec)
    rhs_eff = _null_rhs(cone.nrays) if rhs is None else rhs
    walker = group if spec is None else spec.subgroup
    c = _section_functional(cone)
    graph = build_colored_graph(cone.rays)
    basis_db = OrbitDatabase(walker, rays=cone.rays, graph=graph)
    facet_db = FacetRegister(walker, rays=cone.rays, graph=graph)
    supports = []
    expanded = set()
    deferred = []
    canon = {}
    start = _start_basis(cone, rhs)
    stack = [start.indices]
    pushed = {start.indices}

    def classify(idx):
        # the lex-least orbit image is a complete invariant, so one
        # cached lookup replaces the database probe on every revisit
        ci = walker.min_set_image(idx)[0]
        rep = canon.get(ci)
        if rep is not None:
            return False, rep
        new, rep = basis_db.insert_if_new(idx)
        canon[ci] = rep
        return new, rep

    def expand(idx, node, rep):
        expanded.add(rep)
        node.explored = True
        slacks, dirs = _basis_system(cone, idx, rhs_eff, c)
        for nb in _neighbors(cone, idx, slacks, dirs):
            if nb not in pushed:
                pushed.add(nb)
                stack.append(nb)

    while stack or deferred:
        if not stack:
            node, rep = deferred.pop(0)
            if rep not in expanded:
                expand(node.indices, node, rep)
            continue
        idx = stack.pop()
        new, rep = classify(idx)
        if not new and rep in expanded:
            continue
        node = make_basis(cone, idx)
        node.known = not new
        if new:
            supports.append(node.facet.support)
        if prune and not adjacency_pruning_filter(node, node.facet, facet_db):
            deferred.append((node, rep))
            continue
        expand(idx, node, rep)

    entries = basis_db.entries()
    if stats is not None:
        stats["bases_visited"] = len(pushed)
        stats["basis_orbit_entries"] = entries
    out = fuse(supports, group, rays=cone.rays, graph=graph)
    facets = [facet_from_support(cone, s) for s in out.representatives()]
    return sorted(facets, key=lambda f: f.normal), len(entries)


def explore_basis_graph(task, spec=None, prune=True, stats=None):
    """(facet orbit representatives, basis orbit count) for the task.

    Depth-first over the pivot graph, deduplicated under the
    perturbation subgroup (the task group when unperturbed), facet
    orbits fused under the task group at the end.  ``stats``, when a
    dict, receives the distinct bases pushed and the basis orbit
    entries (whose sizes compute on first read, so asking for the
    count alone stays cheap).  Single-threaded: the pruning protocol
    is order-sensitive.
    """
    if task.trust_group:
        raise ValueError("trusted symmetries need not preserve linear "
                         "dependence, so they do not act on the basis graph")
    return _explore(task.cone, task.group, spec, prune, stats)


def pivot_facet_orbits(cone, group):
    """Facet orbit representatives by the unperturbed basis walk."""
    return _explore(cone, group)[0]


# ---------------------------------------------------------------------------
# Subgroup recipes.


def random_subgroup_with_orbits(group, norbits=2, attempts=200, seed=0):
    """A subgroup with the requested generator orbit count, or None.

    Tries subgroups generated by one to three random words in the
    group's generators; deterministic for a given seed.  Few-orbit
    subgroups keep the perturbation coarse, which preserves more of
    the symmetry in the perturbed basis graph.
    """
    gens = list(group.generators)
    if not gens:
        return group if group.degree == norbits else None
    rng = random.Random(seed)

    def word():
        p = pid(group.degree)
        for _ in range(rng.randrange(1, 8)):
            p = pmul(p, rng.choice(gens))
        return p

    for _ in range(attempts):
        sub = PermGroup(group.degree,
                        tuple(word() for _ in range(rng.randrange(1, 4))))
        if len(generator_orbits(sub)) == norbits:
            return sub
    return None


# ---------------------------------------------------------------------------
# Test-scale verifiers.


def verify_valid_perturbation(family, moved, bijection):
    """Exhaustive check that ``moved`` validly perturbs ``family``.

    ``bijection[i]`` is the index in ``family`` of the moved generator
    i.  Checks, on every index subset of size at most the dimension,
    that no new linear dependence appears, then that the moved
    boundary subdivides the original one.  Exponential; test scale
    only.
    """
    family = tuple(vfrac(v) for v in family)
    moved = tuple(vfrac(v) for v in moved)
    if len(family) != len(moved):
        raise ValueError("families differ in size")
    if sorted(bijection) != list(range(len(family))):
        raise ValueError("bijection must relabel the family")
    d = len(family[0])
    for size in range(1, min(d, len(family)) + 1):
        for sub in combinations(range(len(moved)), size):
            if (rank([moved[i] for i in sub]) < size
                    and rank([family[bijection[i]] for i in sub]) == size):
                return False
    coarse = dual_description_dd(make_cone(family))
    fine = dual_description_dd(make_cone(moved))
    return boundary_complex_refines(coarse, fine, bijection)


def linear_ordering_triangulation_check(d):
    """Pulled-cube triangulation drill for 2 <= d <= 4.

    The cube [-1,1]^d under H fixing the vertex pair {-e, e} is pulled
    orbit by orbit in the order of omega(v) = min(e.v, -e.v).  True
    iff the search finds exactly one basis orbit of 2 d! perturbed
    simplices refining the cube's facets, and a numeric copy with
    explicit epsilons agrees.
    """
    assert 2 <= d <= 4, "desk scale only"
    verts = sorted(product((-1, 1), repeat=d))
    cone = homogenize(verts)
    group = restricted_automorphism_group(cone.rays).group
    sub = group.set_stabilizer((verts.index((-1,) * d),
                                verts.index((1,) * d)))
    orbits = generator_orbits(sub)

    def omega(orb):
        s = sum(cone.rays[orb[0]][:d], Fraction(0))
        return min(s, -s)

    order = tuple(sorted(range(len(orbits)), key=lambda l: omega(orbits[l])))
    spec = make_perturbation_spec(sub, signs=-1, order=order)
    stats = {}
    facets, norbits = _explore(cone, group, spec, stats=stats)
    want = 2 * factorial(d)
    if norbits != 1 or sum(e.size for e in stats["basis_orbit_entries"]) != want:
        return False
    coarse = dual_description_dd(cone)
    cover = set()
    for f in facets:
        cover.update(group.orbit_of_set(f.support))
    if sorted(cover) != sorted(f.support for f in coarse):
        return False
    # replay with explicit epsilons and rebuild the boundary from scratch
    eps = Fraction(1, 1000)
    c = _section_functional(cone)
    rays = [list(v) for v in cone.rays]
    for j, label in enumerate(spec.order):
        for i in spec.orbits[label]:
            for a in range(cone.dim):
                rays[i][a] += spec.signs[label] * eps ** (j + 1) * c[a]
    fine = dual_description_dd(make_cone(rays))
    return (len(fine) == want
            and boundary_complex_refines(coarse, fine,
                                         tuple(range(cone.nrays)))
            and len(fuse([f.support for f in fine], sub).entries()) == 1)
