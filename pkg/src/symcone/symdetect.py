"""Symmetry detection for vector families.

Linear symmetries that permute a family of vectors are exactly the
automorphisms of a complete edge-colored graph: color the pair (i, j) by
the rational value vi' Q^-1 vj, where Q is the positive definite form
sum_i vi vi'.  Any color-preserving vertex bijection is induced by an
invertible matrix, which we reconstruct and verify.  Combinatorial
symmetries of a ray/facet incidence structure are found by the same
backtracking search with a support-preservation check at the leaves.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    dot,
    inverse,
    lex_independent_rows,
    mat_mul,
    mat_vec,
    transpose,
    vfrac,
)
from .permgrp import PermGroup


@dataclass(frozen=True)
class ColoredGraph:
    """Complete graph with canonical vertex and edge color ids.

    Ids index into ``palette``, the sorted tuple of distinct rational
    values, so colors of two graphs can be compared through their values.
    """

    n: int
    vertex_colors: tuple
    edge_colors: dict
    palette: tuple

    def edge(self, a, b):
        return self.edge_colors[(a, b) if a < b else (b, a)]


@dataclass(frozen=True)
class AutomorphismResult:
    group: PermGroup
    witness_matrices: dict


def build_colored_graph(rows):
    """Edge-colored graph whose automorphisms are the linear symmetries."""
    rows = [vfrac(r) for r in rows]
    n, d = len(rows), len(rows[0])
    q = [[sum((v[a] * v[b] for v in rows), Fraction(0)) for b in range(d)]
         for a in range(d)]
    try:
        qinv = inverse(q)
    except ValueError:
        raise ValueError("rows do not span the space") from None
    qv = [mat_vec(qinv, v) for v in rows]
    val = {}
    for i in range(n):
        for j in range(i, n):
            val[(i, j)] = dot(rows[i], qv[j])
    palette = tuple(sorted(set(val.values())))
    ids = {c: k for k, c in enumerate(palette)}
    vertex = tuple(ids[val[(i, i)]] for i in range(n))
    edges = {(i, j): ids[val[(i, j)]]
             for i in range(n) for j in range(i + 1, n)}
    return ColoredGraph(n, vertex, edges, palette)


def _refine(n, vertex_colors, edge):
    """Iterated color-degree refinement to a stable vertex partition."""
    classes = list(vertex_colors)
    while True:
        sigs = []
        for v in range(n):
            around = sorted((edge(v, u), classes[u])
                            for u in range(n) if u != v)
            sigs.append((classes[v], tuple(around)))
        order = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == classes:
            return tuple(classes)
        classes = new


def _orbit(point, perms):
    seen = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for g in perms:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _extend(n, classes, edge, start, target, leaf_ok):
    """Depth-first completion of start -> target over identity on 0..start-1."""
    sigma = list(range(start)) + [None] * (n - start)
    sigma[start] = target
    used = set(range(start))
    used.add(target)

    def rec(pos):
        if pos == n:
            return leaf_ok is None or leaf_ok(sigma)
        for cand in range(n):
            if cand in used or classes[cand] != classes[pos]:
                continue
            if any(edge(j, pos) != edge(sigma[j], cand) for j in range(pos)):
                continue
            sigma[pos] = cand
            used.add(cand)
            if rec(pos + 1):
                return True
            sigma[pos] = None
            used.remove(cand)
        return False

    return tuple(sigma) if rec(start + 1) else None


def _aut_generators(n, classes, edge, leaf_ok=None):
    """Strong generators of the automorphism group, one tower level at a time."""
    gens = []
    for i in range(n):
        level = []
        for t in range(i + 1, n):
            if classes[t] != classes[i]:
                continue
            if any(edge(j, i) != edge(j, t) for j in range(i)):
                continue
            if t in _orbit(i, level):
                continue
            found = _extend(n, classes, edge, i, t, leaf_ok)
            if found is not None:
                gens.append(found)
                level.append(found)
    return gens


def colored_graph_automorphisms(graph):
    """Exact automorphism group of a colored complete graph."""
    classes = _refine(graph.n, graph.vertex_colors, graph.edge)
    return PermGroup(graph.n, _aut_generators(graph.n, classes, graph.edge))


def _solve_witness(rows_from, rows_to, basis, perm):
    b = [rows_from[i] for i in basis]
    t = [rows_to[perm[i]] for i in basis]
    a = transpose(mat_mul(inverse(b), t))
    for j, v in enumerate(rows_from):
        if mat_vec(a, v) != tuple(rows_to[perm[j]]):
            raise ValueError("permutation is not realized by a matrix")
    return tuple(tuple(row) for row in a)


def permutation_witness(rows, perm):
    """The matrix carrying each v_i to v_perm(i), or None if none exists."""
    rows = [vfrac(r) for r in rows]
    basis = lex_independent_rows(rows)
    try:
        return _solve_witness(rows, rows, basis, perm)
    except ValueError:
        return None


def restricted_automorphism_group(rows):
    """Linear symmetries permuting the family, with verified witness matrices.

    The result depends on the chosen generators, not just the cone they
    span; scale them canonically first if that matters.
    """
    rows = [vfrac(r) for r in rows]
    group = colored_graph_automorphisms(build_colored_graph(rows))
    basis = lex_independent_rows(rows)
    witnesses = {g: _solve_witness(rows, rows, basis, g)
                 for g in group.generators}
    return AutomorphismResult(group, witnesses)


def restricted_isomorphism(rows_v, rows_w):
    """A vertex bijection and matrix carrying one family onto the other.

    Returns (permutation, matrix) with matrix * v_i = w_perm(i) for all i,
    or None when the families are not linearly isomorphic.
    """
    rows_v = [vfrac(r) for r in rows_v]
    rows_w = [vfrac(r) for r in rows_w]
    if len(rows_v) != len(rows_w) or len(rows_v[0]) != len(rows_w[0]):
        return None
    gv = build_colored_graph(rows_v)
    gw = build_colored_graph(rows_w)
    n = gv.n

    def value_vertex(g, i):
        return g.palette[g.vertex_colors[i]]

    def value_edge(g, a, b):
        return g.palette[g.edge(a, b)]

    if sorted(value_vertex(gv, i) for i in range(n)) != sorted(
            value_vertex(gw, i) for i in range(n)):
        return None

    sigma = [None] * n
    used = set()

    def rec(pos):
        if pos == n:
            return True
        want = value_vertex(gv, pos)
        for cand in range(n):
            if cand in used or value_vertex(gw, cand) != want:
                continue
            if any(value_edge(gv, j, pos) != value_edge(gw, sigma[j], cand)
                   for j in range(pos)):
                continue
            sigma[pos] = cand
            used.add(cand)
            if rec(pos + 1):
                return True
            sigma[pos] = None
            used.remove(cand)
        return False

    if not rec(0):
        return None
    perm = tuple(sigma)
    basis = lex_independent_rows(rows_v)
    return perm, _solve_witness(rows_v, rows_w, basis, perm)


def combinatorial_automorphisms(incidence):
    """Ray permutations preserving the ray/facet incidence structure.

    ``incidence`` holds one row per ray and one column per facet.  The
    search is pruned by shared-facet color patterns and accepts a leaf
    only if it permutes the facet supports.
    """
    n = len(incidence)
    m = len(incidence[0]) if n else 0
    supports = [frozenset(i for i in range(n) if incidence[i][k])
                for k in range(m)]
    support_set = set(supports)

    raw_vertex = [tuple(sorted(len(s) for s in supports if i in s))
                  for i in range(n)]
    raw_edge = {}
    for i in range(n):
        for j in range(i + 1, n):
            raw_edge[(i, j)] = tuple(
                sorted(len(s) for s in supports if i in s and j in s))
    vids = {c: k for k, c in enumerate(sorted(set(raw_vertex)))}
    eids = {c: k for k, c in enumerate(sorted(set(raw_edge.values())))}
    vertex = tuple(vids[c] for c in raw_vertex)
    edges = {p: eids[c] for p, c in raw_edge.items()}

    def edge(a, b):
        return edges[(a, b) if a < b else (b, a)]

    def leaf_ok(sigma):
        return all(frozenset(sigma[x] for x in s) in support_set
                   for s in supports)

    classes = _refine(n, vertex, edge)
    return PermGroup(n, _aut_generators(n, classes, edge, leaf_ok))
