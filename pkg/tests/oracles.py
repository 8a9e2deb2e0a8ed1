"""Brute-force reference implementations the test suite checks against.

Everything here is deliberately naive and independent of the package code:
different algorithms, same answers.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm


def _primitive(row):
    """Scale a rational row by a positive rational to primitive integers."""
    if not any(row):
        return tuple(row)
    den = lcm(*(x.denominator for x in row))
    ints = [int(x * den) for x in row]
    g = gcd(*ints)
    return tuple(Fraction(v // g) for v in ints)


def fm_optimize(objective, ineqs, eqs=()):
    """(status, sup) of max objective.x over a.x >= b, g.x = c.

    Pure Fourier-Motzkin elimination: append t with t <= objective.x,
    eliminate every x variable, read the bounds on t.  Returns
    ('infeasible', None), ('unbounded', None) or ('optimal', value).
    """
    n = len(objective)
    rows = []  # (coeffs over x..x,t, rhs)
    for a, b in ineqs:
        rows.append((tuple(Fraction(x) for x in a) + (Fraction(0),), Fraction(b)))
    for g, c in eqs:
        gv = tuple(Fraction(x) for x in g)
        rows.append((gv + (Fraction(0),), Fraction(c)))
        rows.append((tuple(-x for x in gv) + (Fraction(0),), -Fraction(c)))
    rows.append((tuple(Fraction(x) for x in objective) + (Fraction(-1),), Fraction(0)))

    for _ in range(n):  # eliminate the leading x variable each round
        pos, neg, zero = [], [], []
        for vec, b in rows:
            if vec[0] > 0:
                pos.append((vec, b))
            elif vec[0] < 0:
                neg.append((vec, b))
            else:
                zero.append((vec, b))
        new = {}
        for vec, b in zero:
            rest = vec[1:]
            new[_primitive(rest + (b,))] = (rest, b)
        for pvec, pb in pos:
            for nvec, nb in neg:
                al, be = pvec[0], -nvec[0]
                vec = tuple(be * p + al * q for p, q in zip(pvec, nvec))
                b = be * pb + al * nb
                rest = vec[1:]
                if not any(rest) and b <= 0:
                    continue  # trivially satisfied
                new[_primitive(rest + (b,))] = (rest, b)
        rows = list(new.values())
        for vec, b in rows:
            if not any(vec) and b > 0:
                return "infeasible", None

    # only t remains; every row is c_t * t >= b with c_t <= 0
    sup = None
    for (ct,), b in rows:
        if ct == 0:
            if b > 0:
                return "infeasible", None
        else:
            bound = b / ct
            if sup is None or bound < sup:
                sup = bound
    if sup is None:
        return "unbounded", None
    return "optimal", sup


# ---------------------------------------------------------------------------
# permutation-group oracles: plain closure and exhaustive filtering


def mulclose(gens, cap=None):
    """All products of the given permutation tuples (identity included)."""
    n = len(gens[0]) if gens else 0
    els = {tuple(range(n))}
    frontier = list(els)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in els:
                    els.add(q)
                    new.append(q)
                    if cap is not None and len(els) > cap:
                        raise RuntimeError("closure exceeds cap")
        frontier = new
    return els


def brute_orbit_of_set(elements, s):
    return sorted({tuple(sorted(g[x] for x in s)) for g in elements})


def brute_set_stabilizer(elements, s):
    s = frozenset(s)
    return [g for g in elements if frozenset(g[x] for x in s) == s]


def brute_representative_action(elements, s, t):
    t = frozenset(t)
    for g in sorted(elements):
        if frozenset(g[x] for x in s) == t:
            return g
    return None


def cube_vertices(d):
    """Vertices of the [-1,1]^d cube, lex sorted."""
    verts = [()]
    for _ in range(d):
        verts = [v + (c,) for v in verts for c in (-1, 1)]
    return sorted(verts)


def cube_vertex_group_gens(d):
    """Vertex permutations generating the full symmetry group of the d-cube."""
    verts = cube_vertices(d)
    index = {v: i for i, v in enumerate(verts)}
    gens = []
    if d >= 2:
        gens.append(tuple(index[(v[1], v[0]) + v[2:]] for v in verts))
        gens.append(tuple(index[v[1:] + v[:1]] for v in verts))
    gens.append(tuple(index[(-v[0],) + v[1:]] for v in verts))
    return len(verts), gens


def brute_force_facets(rays):
    """All facets by testing every (d-1)-subset's hyperplane.

    Exponential; only for tiny inputs.  Uses sympy for the kernels so the
    linear algebra is independent of the package's own.
    """
    import sympy

    rays = [tuple(Fraction(x) for x in r) for r in rays]
    d = len(rays[0])
    out = {}
    for sub in combinations(range(len(rays)), d - 1):
        m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                           for x in rays[i]] for i in sub])
        null = m.nullspace()
        if len(null) != 1:
            continue
        h = tuple(Fraction(int(c.p), int(c.q)) for c in null[0])
        vals = [sum(a * b for a, b in zip(h, v)) for v in rays]
        if all(t >= 0 for t in vals):
            pass
        elif all(t <= 0 for t in vals):
            h = tuple(-x for x in h)
            vals = [-t for t in vals]
        else:
            continue
        normal = _primitive(h)
        support = tuple(i for i, t in enumerate(vals) if t == 0)
        out[normal] = support
    return sorted((sup, nrm) for nrm, sup in out.items())


def _gauss_solve_matrix(b, t):
    """Solve B X = T for X by Gauss-Jordan; None if B is singular."""
    n = len(b)
    aug = [list(b[i]) + list(t[i]) for i in range(n)]
    width = len(aug[0])
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:width] for row in aug]


def brute_linear_witness(rows_v, rows_w, sigma):
    """Matrix A with A v_i = w_sigma(i) for every i, or None."""
    rows_v = [tuple(Fraction(x) for x in r) for r in rows_v]
    rows_w = [tuple(Fraction(x) for x in r) for r in rows_w]
    d = len(rows_v[0])
    basis, idx = [], []
    for i, r in enumerate(rows_v):
        trial = basis + [list(r)]
        if _gauss_rank(trial) == len(trial):
            basis.append(list(r))
            idx.append(i)
        if len(basis) == d:
            break
    if len(basis) < d:
        raise ValueError("rows do not span")
    target = [rows_w[sigma[i]] for i in idx]
    xt = _gauss_solve_matrix(basis, target)
    if xt is None:
        return None
    a = [[xt[r][c] for r in range(d)] for c in range(d)]
    for i, v in enumerate(rows_v):
        img = tuple(sum(a[r][k] * v[k] for k in range(d)) for r in range(d))
        if img != rows_w[sigma[i]]:
            return None
    return a


def _gauss_rank(rows):
    m = [list(r) for r in rows]
    rank_ = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank_, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank_], m[piv] = m[piv], m[rank_]
        lead = m[rank_][col]
        for r in range(rank_ + 1, len(m)):
            if m[r][col]:
                f = m[r][col] / lead
                m[r] = [x - f * y for x, y in zip(m[r], m[rank_])]
        rank_ += 1
    return rank_


def brute_restricted_group(rows):
    """Every permutation realized by an invertible matrix, by trying all n!."""
    from itertools import permutations

    found = []
    for sigma in permutations(range(len(rows))):
        if brute_linear_witness(rows, rows, sigma) is not None:
            found.append(sigma)
    return found


def brute_graph_automorphisms(graph):
    """All color-preserving vertex bijections, by trying n! permutations."""
    from itertools import permutations

    out = []
    for sigma in permutations(range(graph.n)):
        if any(graph.vertex_colors[sigma[i]] != graph.vertex_colors[i]
               for i in range(graph.n)):
            continue
        if all(graph.edge(sigma[i], sigma[j]) == graph.edge(i, j)
               for i in range(graph.n) for j in range(i + 1, graph.n)):
            out.append(sigma)
    return out


def brute_bases(rays):
    """All (d-1)-index sets spanning a facet hyperplane, via sympy ranks."""
    import sympy

    rays = [tuple(Fraction(x) for x in r) for r in rays]
    d = len(rays[0])
    out = set()
    for support, _ in brute_force_facets(rays):
        for sub in combinations(support, d - 1):
            m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                               for x in rays[i]] for i in sub])
            if m.rank() == d - 1:
                out.add(sub)
    return sorted(out)


def brute_orbit_count(sets, elements):
    """Orbits among the index sets under explicitly listed permutations."""
    seen = set()
    n = 0
    for s in sets:
        s = tuple(sorted(s))
        if s in seen:
            continue
        n += 1
        seen.update(tuple(sorted(p[i] for i in s)) for p in elements)
    return n
