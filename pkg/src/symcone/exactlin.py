"""Exact rational linear algebra and an exact two-phase simplex solver.

All scalars are Fraction; right-hand sides may also be LexVal (a tuple of
Fractions compared lexicographically) so that symbolically perturbed systems
run through the same code paths.  No floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


def frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def vfrac(v):
    """Normalise a vector to a tuple of Fractions."""
    return tuple(frac(x) for x in v)


def dot(a, b):
    s = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def identity(n):
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(rows):
    return tuple(zip(*rows))


def mat_vec(rows, x):
    return tuple(dot(r, x) for r in rows)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(ra, cb) for cb in bt) for ra in a)


class LexVal:
    """Fixed-width vector of Fractions ordered lexicographically.

    Stands for a0 + a1*e1 + ... + aL*eL with 1 >> e1 >> ... >> eL > 0.
    Supports the scalar arithmetic a simplex right-hand side needs:
    add/subtract LexVal, multiply/divide by a rational.  Comparisons
    against plain numbers treat the number as (c, 0, ..., 0).
    """

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(frac(p) for p in parts)
        assert self.parts

    @staticmethod
    def scalar(c, width):
        return LexVal((frac(c),) + (Fraction(0),) * (width - 1))

    @property
    def constant(self):
        """The value at eps -> 0."""
        return self.parts[0]

    def _coerce(self, other):
        if isinstance(other, LexVal):
            if len(other.parts) != len(self.parts):
                raise ValueError("mixed LexVal widths")
            return other
        if isinstance(other, (int, Fraction)):
            return LexVal.scalar(other, len(self.parts))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LexVal(tuple(x + y for x, y in zip(self.parts, o.parts)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LexVal(tuple(x - y for x, y in zip(self.parts, o.parts)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LexVal(tuple(y - x for x, y in zip(self.parts, o.parts)))

    def __neg__(self):
        return LexVal(tuple(-x for x in self.parts))

    def __mul__(self, other):
        if isinstance(other, LexVal):
            raise TypeError("LexVal * LexVal is not defined")
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        c = frac(other)
        return LexVal(tuple(c * x for x in self.parts))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LexVal):
            raise TypeError("LexVal / LexVal is not defined")
        c = frac(other)
        return LexVal(tuple(x / c for x in self.parts))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.parts == o.parts

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.parts < o.parts

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.parts <= o.parts

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.parts > o.parts

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.parts >= o.parts

    def __bool__(self):
        return any(self.parts)

    def __repr__(self):
        return "LexVal(%s)" % (self.parts,)

    __hash__ = None  # equality against plain numbers makes hashing a trap


def _eliminate(rows):
    """Full Gauss-Jordan reduction; returns (rref rows, pivot columns)."""
    m = [list(vfrac(r)) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), -1)
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(_eliminate(rows)[1])


def kernel_basis(rows, ncols=None):
    """Rows of the result form a basis of {x : M x = 0}."""
    rows = [vfrac(r) for r in rows]
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        raise ValueError("kernel of an empty matrix needs an explicit ncols")
    m, pivots = _eliminate(rows)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(tuple(v))
    return tuple(basis)


def solve_linear(rows, b):
    """Some x with M x = b, or None if the system is inconsistent."""
    rows = [vfrac(r) for r in rows]
    b = vfrac(b)
    assert len(rows) == len(b)
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    m, pivots = _eliminate(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = m[i][ncols]
    return tuple(x)


def inverse(rows):
    n = len(rows)
    assert all(len(r) == n for r in rows)
    aug = [list(vfrac(r)) + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    m, pivots = _eliminate(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in m)


def lex_independent_rows(rows, want=None):
    """Indices of the lexically first maximal independent subset of rows.

    Greedy: row i is taken iff it is independent of the rows taken before
    it.  Stops early once `want` rows are collected.
    """
    taken = []
    reduced = []  # (pivot column, normalised row)
    for i, row in enumerate(rows):
        v = list(vfrac(row))
        for pc, rr in reduced:
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, rr)]
        c = next((j for j in range(len(v)) if v[j]), -1)
        if c < 0:
            continue
        pv = v[c]
        reduced.append((c, [x / pv for x in v]))
        taken.append(i)
        if want is not None and len(taken) == want:
            break
    return taken


def integer_primitive(v):
    """Scale v to the smallest integer vector with the same direction."""
    v = vfrac(v)
    if not any(v):
        return v
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    return tuple(Fraction(x // g) for x in ints)


def oriented_primitive(v):
    """integer_primitive, then flip sign so the first nonzero entry is > 0."""
    w = integer_primitive(v)
    for x in w:
        if x:
            return w if x > 0 else tuple(-y for y in w)
    return w


@dataclass
class LPResult:
    """Outcome of lp_solve.

    optimal:    certificate = maximiser x, value = objective value
    unbounded:  certificate = feasible improving ray
    infeasible: certificate = Farkas multipliers y (inequality rows first,
                then equality rows); y >= 0 on inequality rows,
                sum y_i a_i = 0 and sum y_i b_i > 0.
    """
    status: str
    certificate: tuple
    value: object = None


def _pivot(T, rhs, basis, d, r, s):
    pv = T[r][s]
    if pv != 1:
        T[r] = [x / pv for x in T[r]]
        rhs[r] = rhs[r] / pv
    prow = T[r]
    for i in range(len(T)):
        if i != r and T[i][s]:
            f = T[i][s]
            T[i] = [x - f * y for x, y in zip(T[i], prow)]
            rhs[i] = rhs[i] - f * rhs[r]
    if d[s]:
        f = d[s]
        for j in range(len(d)):
            if prow[j]:
                d[j] = d[j] - f * prow[j]
    basis[r] = s


def _simplex(T, rhs, basis, cost):
    """Bland-rule simplex (minimisation) on an equality-form tableau.

    Mutates T/rhs/basis in place.  Returns (status, entering column or -1,
    reduced-cost row).
    """
    m = len(T)
    ncols = len(cost)
    d = list(cost)
    for i in range(m):
        ci = cost[basis[i]]
        if ci:
            row = T[i]
            for j in range(ncols):
                if row[j]:
                    d[j] -= ci * row[j]
    while True:
        s = next((j for j in range(ncols) if d[j] < 0), -1)
        if s < 0:
            return "optimal", -1, d
        r = -1
        best = None
        for i in range(m):
            a = T[i][s]
            if a > 0:
                t = rhs[i] / a
                if best is None or t < best or (t == best and basis[i] < basis[r]):
                    best = t
                    r = i
        if r < 0:
            return "unbounded", s, d
        _pivot(T, rhs, basis, d, r, s)


def lp_solve(objective, ineqs, eqs=()):
    """Maximise objective.x subject to a.x >= b (ineqs) and g.x = c (eqs).

    Constraints are (coefficients, rhs) pairs; rhs entries may be Fraction
    or LexVal (then the optimum and its value come back as LexVal).  Exact
    two-phase simplex with Bland's rule, so results are deterministic.
    Certificates are verified by substitution before returning.
    """
    obj = vfrac(objective)
    n = len(obj)
    rows = [(vfrac(a), b, False) for a, b in ineqs] + \
           [(vfrac(g), b, True) for g, b in eqs]
    for a, _, _ in rows:
        if len(a) != n:
            raise ValueError("constraint length mismatch")

    width = 0
    for _, b, _ in rows:
        if isinstance(b, LexVal):
            if width and len(b.parts) != width:
                raise ValueError("mixed LexVal widths")
            width = len(b.parts)

    def promote(b):
        if isinstance(b, LexVal):
            return b
        return LexVal.scalar(b, width) if width else frac(b)

    zero = promote(0)
    rows = [(a, promote(b), is_eq) for a, b, is_eq in rows]

    m = len(rows)
    ni = sum(1 for _, _, is_eq in rows if not is_eq)
    base_cols = 2 * n + ni  # x+ | x- | slacks
    T, rhs, sign = [], [], []
    for i, (a, b, _) in enumerate(rows):
        row = [Fraction(0)] * base_cols
        for j, x in enumerate(a):
            row[j] = x
            row[n + j] = -x
        if i < ni:
            row[2 * n + i] = Fraction(-1)
        if b < 0:
            row = [-x for x in row]
            b = -b
            sign.append(-1)
        else:
            sign.append(1)
        T.append(row)
        rhs.append(b)

    # phase 1: minimise the sum of artificials, starting from them
    for i in range(m):
        T[i].extend(Fraction(int(i == k)) for k in range(m))
    basis = list(range(base_cols, base_cols + m))
    cost1 = [Fraction(0)] * base_cols + [Fraction(1)] * m
    status, _, d = _simplex(T, rhs, basis, cost1)
    assert status == "optimal"  # phase-1 objective is bounded below by 0

    z1 = zero
    for i in range(m):
        if basis[i] >= base_cols:
            z1 = z1 + rhs[i]
    if z1 > 0:
        pi = [Fraction(1) - d[base_cols + k] for k in range(m)]
        y = tuple(pi[i] * sign[i] for i in range(m))
        for j in range(n):
            assert sum(y[i] * rows[i][0][j] for i in range(m)) == 0
        assert all(y[i] >= 0 for i in range(ni))
        tot = zero
        for i in range(m):
            if y[i]:
                tot = tot + y[i] * rows[i][1]
        assert tot > 0
        return LPResult("infeasible", y)

    # drive leftover artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= base_cols:
            s = next((j for j in range(base_cols) if T[i][j]), -1)
            if s < 0:
                continue
            _pivot(T, rhs, basis, d, i, s)
        keep.append(i)
    T = [T[i][:base_cols] for i in keep]
    rhs = [rhs[i] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2: minimise -objective
    cost2 = [Fraction(0)] * base_cols
    for j in range(n):
        cost2[j] = -obj[j]
        cost2[n + j] = obj[j]
    status, s, _ = _simplex(T, rhs, basis, cost2)

    if status == "unbounded":
        dirv = [Fraction(0)] * base_cols
        dirv[s] = Fraction(1)
        for i, bi in enumerate(basis):
            dirv[bi] = -T[i][s]
        ray = tuple(dirv[j] - dirv[n + j] for j in range(n))
        for a, _, is_eq in rows:
            da = dot(a, ray)
            assert da == 0 if is_eq else da >= 0
        assert dot(obj, ray) > 0
        return LPResult("unbounded", ray)

    vals = dict(zip(basis, rhs))
    x = tuple(vals.get(j, zero) - vals.get(n + j, zero) for j in range(n))
    value = zero
    for j in range(n):
        if obj[j]:
            value = value + obj[j] * x[j]
    for a, b, is_eq in rows:
        ax = dot(a, x)
        assert ax == b if is_eq else ax >= b
    return LPResult("optimal", x, value)


def is_redundant_generator(rays, i, equality_set=()):
    """Whether f(rays[i]) >= 0 already follows from the other generators.

    True iff every linear functional f with f(rays[j]) >= 0 for j != i and
    f(rays[k]) = 0 for k in equality_set also satisfies f(rays[i]) >= 0.
    """
    rays = [vfrac(r) for r in rays]
    if not 0 <= i < len(rays):
        raise IndexError("ray index out of range")
    eqset = set(equality_set)
    for k in eqset:
        if not 0 <= k < len(rays):
            raise IndexError("equality-set index out of range")
    if i in eqset:
        return True
    vi = rays[i]
    ineqs = [(rays[j], 0) for j in range(len(rays)) if j != i and j not in eqset]
    ineqs.append((vi, Fraction(-1)))  # cap so the test LP stays bounded
    eqs = [(rays[k], 0) for k in sorted(eqset)]
    res = lp_solve(tuple(-x for x in vi), ineqs, eqs)
    assert res.status == "optimal"
    return res.value == 0
