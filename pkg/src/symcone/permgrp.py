"""Permutation groups on 0..n-1 with a deterministic stabilizer chain.

Permutations are tuples of images (0-based internally; parsing/formatting
shifts to the 1-based cycle convention used in input files).  The chain is
built by incremental Schreier-Sims with fixed iteration orders, so every
query result is reproducible run to run.
"""

import re
import threading
from collections import deque

_LOCK = threading.RLock()


def pid(n):
    return tuple(range(n))


def pmul(p, q):
    """Compose: apply q first, then p."""
    return tuple(p[x] for x in q)


def pinv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def papply_set(p, s):
    return frozenset(p[x] for x in s)


def parse_permutation(text, degree):
    """Parse "(1 2 3)(4 5)" cycle notation or a one-line image list (1-based)."""
    body = text.strip().replace(",", " ")
    if body in ("", "()", "id"):
        return pid(degree)
    if "(" in body:
        images = list(range(degree))
        seen = set()
        chunks = re.findall(r"\(([^()]*)\)", body)
        leftover = re.sub(r"\([^()]*\)", "", body).strip()
        if not chunks or leftover:
            raise ValueError("bad cycle notation: %r" % text)
        for chunk in chunks:
            pts = [int(t) for t in chunk.split()]
            if not pts:
                continue
            for t in pts:
                if not 1 <= t <= degree:
                    raise ValueError("point %d out of range 1..%d" % (t, degree))
                if t - 1 in seen:
                    raise ValueError("point %d repeated in %r" % (t, text))
                seen.add(t - 1)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b - 1
        return tuple(images)
    pts = [int(t) for t in body.split()]
    if sorted(pts) != list(range(1, degree + 1)):
        raise ValueError("image list is not a permutation of 1..%d: %r" % (degree, text))
    return tuple(t - 1 for t in pts)


def format_cycles(p):
    """Disjoint-cycle string, 1-based; identity prints as "()"."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) if out else "()"


class _ChainNode:
    """One level of a stabilizer chain; its group is <gens>.

    Generators are nested downward: every generator stored at the child
    also appears here, so `gens` always generates this level's group.
    """

    __slots__ = ("degree", "gens", "base_point", "transversal", "child",
                 "_orbit_order", "_processed", "_orbit_info", "_stab_cache")

    def __init__(self, degree):
        self.degree = degree
        self.gens = []
        self.base_point = None
        self.transversal = None
        self.child = None
        self._orbit_order = None
        self._processed = set()
        self._orbit_info = None
        self._stab_cache = {}

    def order(self):
        n = 1
        node = self
        while node is not None and node.base_point is not None:
            n *= len(node.transversal)
            node = node.child
        return n

    def close(self):
        """Re-close the base orbit; return fresh non-identity Schreier gens."""
        if self.base_point is None:
            return []
        order = self._orbit_order
        i = 0
        while i < len(order):
            t = order[i]
            u_t = self.transversal[t]
            for g in self.gens:
                x = g[t]
                if x not in self.transversal:
                    self.transversal[x] = pmul(g, u_t)
                    order.append(x)
            i += 1
        idn = pid(self.degree)
        out = []
        for t in order:
            u_t = self.transversal[t]
            for gi in range(len(self.gens)):
                if (t, gi) in self._processed:
                    continue
                self._processed.add((t, gi))
                g = self.gens[gi]
                s = pmul(pinv(self.transversal[g[t]]), pmul(g, u_t))
                if s != idn:
                    out.append(s)
        return out

    def orbit_info(self):
        """point -> (minimum of its orbit here, a perm sending point to it)."""
        if self._orbit_info is None:
            with _LOCK:
                if self._orbit_info is None:
                    idn = pid(self.degree)
                    info = {}
                    for start in range(self.degree):
                        if start in info:
                            continue
                        orb = {start}
                        queue = [start]
                        qi = 0
                        while qi < len(queue):
                            t = queue[qi]
                            qi += 1
                            for g in self.gens:
                                x = g[t]
                                if x not in orb:
                                    orb.add(x)
                                    queue.append(x)
                        m = min(orb)
                        u = {m: idn}
                        queue = [m]
                        qi = 0
                        while qi < len(queue):
                            t = queue[qi]
                            qi += 1
                            for g in self.gens:
                                x = g[t]
                                if x not in u:
                                    u[x] = pmul(g, u[t])
                                    queue.append(x)
                        for p in orb:
                            info[p] = (m, pinv(u[p]))
                    self._orbit_info = info
        return self._orbit_info

    def point_stab(self, m):
        """Chain node for the stabilizer of point m in this level's group."""
        if not self.gens:
            return self
        if m == self.base_point:
            return self.child
        node = self._stab_cache.get(m)
        if node is None:
            with _LOCK:
                node = self._stab_cache.get(m)
                if node is None:
                    node = self._build_point_stab(m)
                    self._stab_cache[m] = node
        return node

    def _build_point_stab(self, m):
        idn = pid(self.degree)
        u = {m: idn}
        order = [m]
        i = 0
        while i < len(order):
            t = order[i]
            i += 1
            for g in self.gens:
                x = g[t]
                if x not in u:
                    u[x] = pmul(g, u[t])
                    order.append(x)
        target = self.order() // len(u)
        sub = _ChainNode(self.degree)
        done = False
        for t in order:
            for g in self.gens:
                s = pmul(pinv(u[g[t]]), pmul(g, u[t]))
                if s != idn:
                    _chain_extend(sub, s)
                    if sub.order() == target:
                        done = True
                        break
            if done:
                break
        assert sub.order() == target
        return sub


def _sift_path(root, p):
    path = [root]
    node = root
    while node.base_point is not None:
        x = p[node.base_point]
        u = node.transversal.get(x)
        if u is None:
            return p, path
        p = pmul(pinv(u), p)
        node = node.child
        path.append(node)
    return p, path


def _chain_extend(root, gen):
    idn = pid(root.degree)
    work = deque([gen])
    while work:
        p = work.popleft()
        if p == idn:
            continue
        residue, path = _sift_path(root, p)
        if residue == idn:
            continue
        stuck = path[-1]
        if stuck.base_point is None:
            stuck.base_point = next(i for i, x in enumerate(residue) if x != i)
            stuck.transversal = {stuck.base_point: idn}
            stuck._orbit_order = [stuck.base_point]
            stuck.child = _ChainNode(root.degree)
        for node in path:
            node.gens.append(residue)
            node._orbit_info = None
            node._stab_cache = {}
            work.extend(node.close())


class PermGroup:
    """Immutable permutation group; all queries are deterministic."""

    def __init__(self, degree, generators=()):
        self.degree = degree
        idn = pid(degree)
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError("not a permutation of degree %d: %r" % (degree, g))
            if g != idn and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._chain = None

    @staticmethod
    def _wrap(degree, chain):
        g = PermGroup.__new__(PermGroup)
        g.degree = degree
        g.generators = tuple(dict.fromkeys(chain.gens))
        g._chain = chain
        return g

    def _built(self):
        if self._chain is None:
            with _LOCK:
                if self._chain is None:
                    root = _ChainNode(self.degree)
                    for g in self.generators:
                        _chain_extend(root, g)
                    self._chain = root
        return self._chain

    def __repr__(self):
        return "PermGroup(degree=%d, gens=%d)" % (self.degree, len(self.generators))

    def order(self):
        return self._built().order()

    def contains(self, p):
        p = tuple(p)
        if len(p) != self.degree:
            return False
        residue, _ = _sift_path(self._built(), p)
        return residue == pid(self.degree)

    def contains_group(self, other):
        return other.degree == self.degree and \
            all(self.contains(g) for g in other.generators)

    def elements(self, cap=None):
        """All group elements via transversal products, deterministic order."""
        if cap is not None and self.order() > cap:
            raise RuntimeError("group order %d exceeds cap %d" % (self.order(), cap))

        def rec(node):
            if node is None or node.base_point is None:
                return [pid(self.degree)]
            tail = rec(node.child)
            out = []
            for x in sorted(node.transversal):
                u = node.transversal[x]
                for h in tail:
                    out.append(pmul(u, h))
            return out

        return rec(self._built())

    def conjugate(self, p):
        """The group p . self . p^-1 (acting on relabelled points)."""
        q = pinv(p)
        return PermGroup(self.degree,
                         [pmul(pmul(p, g), q) for g in self.generators])

    def orbit_of_set(self, s, cap=None):
        """Sorted list of the distinct images of s (each a sorted tuple)."""
        start = frozenset(s)
        seen = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for g in self.generators:
                x = papply_set(g, t)
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
                    if cap is not None and len(seen) > cap:
                        raise RuntimeError("set orbit exceeds cap %d" % cap)
        return sorted(tuple(sorted(t)) for t in seen)

    def stabilizer_of_point(self, x):
        node = self._built().point_stab(x)
        return PermGroup._wrap(self.degree, node)

    def set_stabilizer(self, s, cap=1_000_000):
        """The setwise stabilizer {g : g(s) = s} as a PermGroup."""
        s = frozenset(s)
        if all(papply_set(g, s) == s for g in self.generators):
            return self
        idn = pid(self.degree)
        trans = {s: idn}
        order = [s]
        i = 0
        while i < len(order):
            t = order[i]
            i += 1
            for g in self.generators:
                x = papply_set(g, t)
                if x not in trans:
                    if len(trans) >= cap:
                        raise RuntimeError("set orbit exceeds cap %d" % cap)
                    trans[x] = pmul(g, trans[t])
                    order.append(x)
        target, rem = divmod(self.order(), len(order))
        assert rem == 0
        sub = _ChainNode(self.degree)
        done = sub.order() == target
        for t in order:
            if done:
                break
            for g in self.generators:
                x = papply_set(g, t)
                sg = pmul(pinv(trans[x]), pmul(g, trans[t]))
                if sg != idn:
                    _chain_extend(sub, sg)
                    if sub.order() == target:
                        done = True
                        break
        assert sub.order() == target
        return PermGroup._wrap(self.degree, sub)

    def min_set_image(self, s):
        """(lex-least image of s as a sorted tuple, witness permutation)."""
        s = tuple(sorted(set(s)))
        idn = pid(self.degree)
        if not s:
            return (), idn
        if not all(0 <= x < self.degree for x in s):
            raise ValueError("set not within 0..%d" % (self.degree - 1))
        node = self._built()
        states = {frozenset(s): idn}
        prefix = []
        for _ in range(len(s)):
            info = node.orbit_info()
            m_star = min(min(info[r][0] for r in R) for R in states)
            new_states = {}
            for R in sorted(states, key=sorted):
                sigma = states[R]
                for r in sorted(R):
                    m, tau = info[r]
                    if m != m_star:
                        continue
                    r2 = frozenset(tau[x] for x in R) - {m_star}
                    if r2 not in new_states:
                        new_states[r2] = pmul(tau, sigma)
            prefix.append(m_star)
            node = node.point_stab(m_star)
            states = new_states
        witness = states[frozenset()]
        assert frozenset(witness[x] for x in s) == frozenset(prefix)
        return tuple(prefix), witness

    def canonical_representative(self, s):
        """Lexicographically least element of the set orbit of s."""
        return self.min_set_image(s)[0]

    def representative_action(self, s, t):
        """Some g with g(s) = t setwise, or None."""
        s, t = frozenset(s), frozenset(t)
        if len(s) != len(t):
            return None
        cs, ws = self.min_set_image(s)
        ct, wt = self.min_set_image(t)
        if cs != ct:
            return None
        g = pmul(pinv(wt), ws)
        assert papply_set(g, s) == t
        return g

    def double_coset_split(self, sub, f, cap=1_000_000):
        """One representative per sub-orbit inside this group's orbit of f.

        sub must be a subgroup; f itself represents its own class, the other
        representatives follow lex-ascending, and their sub-orbits partition
        the full orbit.
        """
        if not self.contains_group(sub):
            raise ValueError("splitting group is not a subgroup")
        orbit = self.orbit_of_set(f, cap=cap)
        covered = set()
        reps = []
        total = 0
        for t in [tuple(sorted(f))] + orbit:
            key = frozenset(t)
            if key in covered:
                continue
            reps.append(t)
            suborbit = sub.orbit_of_set(t, cap=cap)
            covered.update(frozenset(x) for x in suborbit)
            total += len(suborbit)
        assert total == len(orbit)
        return reps
