"""Polyhedral cones: homogenization, reduction, double description, wrapping.

A cone is a tuple of generator rays over Fractions.  Facets carry their
exact incidence support and a canonically scaled normal (coprime integers,
oriented so the functional is nonnegative on the whole cone).
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    _eliminate,
    dot,
    integer_primitive,
    inverse,
    kernel_basis,
    lex_independent_rows,
    lp_solve,
    rank,
    transpose,
    vfrac,
)


class DegenerateConeError(Exception):
    """The cone is a linear subspace; it has no facets."""


@dataclass(frozen=True)
class Reduction:
    """How a cone was brought to pointed/full-dimensional form."""
    original_dim: int
    kept_rays: tuple      # indices of surviving generators, in input order
    kept_columns: tuple   # coordinates selected for the projection
    lineality: tuple      # basis rows of the lineality space (original coords)
    span_equations: tuple # functionals vanishing on the span of the cone
    lift: tuple           # rows L_k with reduced coord k = L_k . x


@dataclass(frozen=True)
class Cone:
    rays: tuple
    homogenized: bool = False
    reduction: object = None

    @property
    def dim(self):
        return len(self.rays[0])

    @property
    def nrays(self):
        return len(self.rays)


@dataclass(frozen=True)
class Facet:
    support: tuple  # sorted indices of all incident generators
    normal: tuple   # coprime integers, >= 0 on every generator


def make_cone(rows, homogenized=False, reduction=None):
    rows = tuple(vfrac(r) for r in rows)
    if not rows:
        raise ValueError("a cone needs at least one generator")
    if len({len(r) for r in rows}) != 1:
        raise ValueError("generators of mixed dimension")
    return Cone(rows, homogenized, reduction)


def homogenize(points, rays=()):
    """Cone over (p,1) for each point and (r,0) for each ray."""
    points = [vfrac(p) for p in points]
    rays = [vfrac(r) for r in rays]
    if not points and not rays:
        raise ValueError("empty input")
    one, zero = Fraction(1), Fraction(0)
    rows = [p + (one,) for p in points] + [r + (zero,) for r in rays]
    return make_cone(rows, homogenized=True)


def in_cone(rays, x):
    """Whether x is a nonnegative combination of the rays."""
    n = len(rays)
    ineqs = [(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
    eqs = [(tuple(r[k] for r in rays), x[k]) for k in range(len(x))]
    return lp_solve((0,) * n, ineqs, eqs).status == "optimal"


def make_facet(rays, normal, support=None):
    """Canonically scaled facet; verifies validity against the rays."""
    f = integer_primitive(normal)
    sup = []
    for i, v in enumerate(rays):
        t = dot(f, v)
        assert t >= 0, "normal is negative on generator %d" % i
        if t == 0:
            sup.append(i)
    sup = tuple(sup)
    if support is not None:
        assert tuple(sorted(support)) == sup, "claimed support is not exact"
    return Facet(sup, f)


def facet_from_support(cone, support):
    """Reconstruct the unique facet with the given support, or raise."""
    support = tuple(sorted(set(support)))
    rows = [cone.rays[i] for i in support]
    ker = kernel_basis(rows, ncols=cone.dim)
    if len(ker) != 1:
        raise ValueError("support does not span a facet hyperplane")
    f = ker[0]
    sign = 0
    for v in cone.rays:
        t = dot(f, v)
        if t:
            sign = 1 if t > 0 else -1
            break
    if sign < 0:
        f = tuple(-x for x in f)
    fac = make_facet(cone.rays, f)
    if fac.support != support:
        raise ValueError("support is not incidence-closed")
    return fac


def reduce_to_pointed_fulldim(cone):
    """Project onto coordinates where the cone is pointed and full-dim.

    Returns a new Cone whose .reduction records the lineality basis, the
    span equations and the lift functionals, so facets of the reduced cone
    pull back to valid inequalities of the original.
    """
    V = cone.rays
    D = cone.dim
    r = rank(V)
    lin_idx = [i for i, v in enumerate(V)
               if not any(v) or in_cone(V, tuple(-x for x in v))]
    lin_rows = [V[i] for i in lin_idx]
    basis_sel = lex_independent_rows(lin_rows)
    B = [lin_rows[i] for i in basis_sel]
    ell = len(B)
    if r == ell:
        raise DegenerateConeError(
            "cone is a linear subspace of dimension %d" % r)

    # subtract each ray's lineality component (pivot-coordinate matching)
    R, pivots = _eliminate(B) if B else ([], [])

    def correct(v):
        w = list(v)
        for j, p in enumerate(pivots):
            c = v[p]
            if c:
                for k in range(D):
                    w[k] -= c * R[j][k]
        return tuple(w)

    corrected = [correct(v) for v in V]
    kept = [i for i, w in enumerate(corrected) if any(w)]
    kept_rows = [corrected[i] for i in kept]
    cols = lex_independent_rows(transpose(kept_rows))
    assert len(cols) == r - ell
    projected = tuple(tuple(w[k] for k in cols) for w in kept_rows)

    lift = []
    for k in cols:
        row = [Fraction(0)] * D
        row[k] = Fraction(1)
        for j, p in enumerate(pivots):
            if R[j][k]:
                row[p] -= R[j][k]
        lift.append(tuple(row))

    red = Reduction(
        original_dim=D,
        kept_rays=tuple(kept),
        kept_columns=tuple(cols),
        lineality=tuple(tuple(b) for b in B),
        span_equations=kernel_basis(V),
        lift=tuple(lift),
    )
    return Cone(projected, homogenized=cone.homogenized, reduction=red)


def lift_normal(reduction, g):
    """Pull a reduced-cone functional back to original coordinates."""
    D = reduction.original_dim
    out = [Fraction(0)] * D
    for gk, row in zip(g, reduction.lift):
        if gk:
            for k in range(D):
                out[k] += gk * row[k]
    return tuple(out)


def is_pointed(cone):
    """A cone is pointed iff some functional is strictly positive on it."""
    V = cone.rays
    res = lp_solve((0,) * cone.dim, [(v, 1) for v in V])
    return res.status == "optimal"


def dual_description_dd(cone, check_pointed=True):
    """Complete facet list by the double description method.

    Rows are inserted in lexicographic order, so the result (sorted by
    normal) is identical for any permutation of the input rows.
    """
    V = cone.rays
    n, d = cone.nrays, cone.dim
    assert all(any(v) for v in V), "zero generator"
    if rank(V) != d:
        raise ValueError("cone is not full-dimensional")
    if check_pointed and not is_pointed(cone):
        raise ValueError("cone is not pointed")

    order = sorted(range(n), key=lambda i: V[i])
    first = lex_independent_rows([V[i] for i in order], want=d)
    init = [order[i] for i in first]
    M = [V[i] for i in init]
    rays_dual = [tuple(col) for col in zip(*inverse(M))]  # rows of M^-T

    processed = list(init)
    masks = []
    for f in rays_dual:
        m = 0
        for pos, i in enumerate(processed):
            if dot(f, V[i]) == 0:
                m |= 1 << pos
        masks.append(m)

    for i in order:
        if i in init:
            continue
        v = V[i]
        vals = [dot(f, v) for f in rays_dual]
        keep_idx = [k for k, t in enumerate(vals) if t >= 0]
        neg_idx = [k for k, t in enumerate(vals) if t < 0]
        new_rays, new_masks = [], []
        bit = 1 << len(processed)
        for k in keep_idx:
            new_rays.append(rays_dual[k])
            new_masks.append(masks[k] | (bit if vals[k] == 0 else 0))
        for kp in keep_idx:
            if vals[kp] == 0:
                continue
            for kn in neg_idx:
                common = masks[kp] & masks[kn]
                adjacent = True
                for ko in range(len(rays_dual)):
                    if ko != kp and ko != kn and masks[ko] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                g = tuple(vals[kp] * fn - vals[kn] * fp
                          for fp, fn in zip(rays_dual[kp], rays_dual[kn]))
                g = integer_primitive(g)
                m = 0
                for pos, j in enumerate(processed):
                    if dot(g, V[j]) == 0:
                        m |= 1 << pos
                new_rays.append(g)
                new_masks.append(m | bit)
        processed.append(i)
        rays_dual, masks = new_rays, new_masks

    facets = sorted((make_facet(V, f) for f in rays_dual),
                    key=lambda fc: fc.normal)
    for f in facets:
        assert rank([V[i] for i in f.support]) == d - 1
    return facets


def initial_facet(cone):
    """One facet, found by linear programming (seed for decompositions)."""
    V = cone.rays
    d = cone.dim
    total = tuple(sum(col) for col in zip(*V))
    ineqs = [(v, 0) for v in V]
    eqs = [(total, 1)]
    res = lp_solve(tuple(-x for x in V[0]), ineqs, eqs)
    assert res.status == "optimal"
    f = res.certificate
    support = [i for i, v in enumerate(V) if dot(f, v) == 0]
    if rank([V[i] for i in support]) != d - 1:
        # degenerate optimum: force a vertex of the dual polytope by
        # greedily zeroing generators one at a time
        for j in range(len(V)):
            r = lp_solve(tuple(-x for x in V[j]), ineqs, eqs)
            assert r.status == "optimal"
            if r.value == 0:
                eqs.append((V[j], 0))
        res = lp_solve((0,) * d, ineqs, eqs)
        assert res.status == "optimal"
        f = res.certificate
        support = [i for i, v in enumerate(V) if dot(f, v) == 0]
        assert rank([V[i] for i in support]) == d - 1
    return make_facet(V, f)


def restrict_to_span(rays):
    """Project rays onto lex-first independent coordinates of their span.

    The projection is a linear isomorphism on the span, so incidence and
    facial structure are preserved exactly.  Returns (projected, columns).
    """
    cols = lex_independent_rows(transpose(rays))
    return tuple(tuple(r[k] for k in cols) for r in rays), tuple(cols)


def subcone(cone, indices):
    """The cone spanned by a subset of generators, made full-dimensional."""
    rows = [cone.rays[i] for i in indices]
    projected, cols = restrict_to_span(rows)
    return make_cone(projected), cols


def ridges_of(cone, facet, converter=None):
    """Ridges of a facet, as incidence-closed index sets of the big cone.

    Converts the facet subcone (its supporting rays, projected into their
    span) and maps the resulting facet supports back.  `converter` lets the
    caller substitute a recursive conversion for plain double description.
    """
    sub, _ = subcone(cone, facet.support)
    sub_facets = converter(sub) if converter is not None else \
        dual_description_dd(sub, check_pointed=False)
    out = []
    for sf in sub_facets:
        out.append(tuple(sorted(facet.support[i] for i in sf.support)))
    return sorted(out)


def gift_wrap(cone, facet, ridge):
    """The unique facet other than `facet` containing the ridge."""
    V = cone.rays
    d = cone.dim
    ridge = tuple(sorted(ridge))
    if not set(ridge) <= set(facet.support):
        raise ValueError("ridge is not contained in the facet")
    rows = [V[i] for i in ridge]
    if rank(rows) != d - 2:
        raise ValueError("ridge rays do not have rank d-2")
    ker = kernel_basis(rows, ncols=d)
    assert len(ker) == 2
    g1, g2 = ker
    shadow = [(dot(g1, v), dot(g2, v)) for v in V]
    nz = [p for p in shadow if any(p)]

    def cross(a, b):
        return a[0] * b[1] - a[1] * b[0]

    b1 = b2 = nz[0]
    for p in nz[1:]:
        if cross(b1, p) < 0:
            b1 = p
        if cross(b2, p) > 0:
            b2 = p
    candidates = []
    for h in ((-b1[1], b1[0]), (b2[1], -b2[0])):
        f = tuple(h[0] * a + h[1] * b for a, b in zip(g1, g2))
        if any(dot(f, v) < 0 for v in V):
            raise ValueError("ridge is not a ridge of the cone")
        candidates.append(make_facet(V, f))
    others = [c for c in candidates if c.normal != facet.normal]
    if len(others) != 1:
        raise ValueError("ridge is not a ridge of the facet")
    assert set(ridge) <= set(others[0].support)
    return others[0]


def incidence_matrix(cone, facets):
    """Boolean rays x facets matrix of exact incidences."""
    sets = [frozenset(f.support) for f in facets]
    return tuple(tuple(i in s for s in sets) for i in range(cone.nrays))


def boundary_complex_refines(coarse_facets, fine_facets, nu):
    """Whether the fine facet family subdivides the coarse one under nu.

    nu maps fine generator indices to coarse generator indices.  True iff
    each fine support lands inside exactly one coarse support and each
    coarse facet is exactly covered.
    """
    coarse_sets = [frozenset(f.support) for f in coarse_facets]
    covered = [set() for _ in coarse_facets]
    for f in fine_facets:
        mapped = frozenset(nu[i] for i in f.support)
        homes = [k for k, cs in enumerate(coarse_sets) if mapped <= cs]
        if len(homes) != 1:
            return False
        covered[homes[0]] |= mapped
    return all(set(cs) == got for cs, got in zip(coarse_sets, covered))
