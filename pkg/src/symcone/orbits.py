"""Orbit databases for face sets under a permutation group.

Representatives of group orbits are stored bucketed by cheap invariants
(cardinality, ray rank, pairwise color fingerprint), so an equivalence
probe only ever compares against candidates that could possibly match.
"""

import threading
from dataclasses import dataclass

from .exactlin import rank
from .permgrp import PermGroup


@dataclass(frozen=True)
class OrbitKey:
    cardinality: int
    rank: int
    metric_fingerprint: tuple


class OrbitEntry:
    """One stored orbit: representative, size, and an open/closed flag.

    The size is |group| / |stabilizer of the representative|; finding the
    stabilizer can dwarf the insertion that discovered the orbit, so the
    division is deferred until someone actually reads ``size``.
    """

    __slots__ = ("representative", "status", "_size", "_group")

    def __init__(self, representative, size=None, status="open", group=None):
        self.representative = representative
        self.status = status
        self._size = size
        self._group = group

    @property
    def size(self):
        if self._size is None:
            g = self._group
            stab = g.set_stabilizer(self.representative)
            self._size = g.order() // stab.order()
        return self._size

    def __repr__(self):
        shown = "?" if self._size is None else self._size
        return ("OrbitEntry(representative=%r, size=%s, status=%r)"
                % (self.representative, shown, self.status))


class OrbitDatabase:
    """Pairwise inequivalent face-set representatives under one group.

    ``rays`` (for ranks) and ``graph`` (for color fingerprints) sharpen the
    bucket keys when given.  Attach a graph only when the group preserves
    its colors — true for restricted automorphism groups and their
    subgroups — otherwise equivalent sets could land in distinct buckets.
    """

    def __init__(self, group, rays=None, graph=None):
        self.group = group
        self.rays = None if rays is None else tuple(tuple(r) for r in rays)
        self.graph = graph
        self.buckets = {}
        self._lock = threading.Lock()

    def key_of(self, s):
        s = tuple(sorted(set(s)))
        rk = 0 if self.rays is None else rank([self.rays[i] for i in s])
        fp = ()
        if self.graph is not None:
            fp = tuple(sorted(
                self.graph.edge(a, b) if a != b else self.graph.vertex_colors[a]
                for k, a in enumerate(s) for b in s[k:]))
        return OrbitKey(len(s), rk, fp)

    def insert_if_new(self, s):
        """Store s unless an equivalent set is already present.

        Returns (is_new, stored representative).  Probes only the bucket
        with s's key and compares by explicit representative_action.
        """
        s = tuple(sorted(set(s)))
        key = self.key_of(s)
        with self._lock:
            bucket = self.buckets.setdefault(key, [])
            for entry in bucket:
                if self.group.representative_action(
                        entry.representative, s) is not None:
                    return False, entry.representative
            rep = self.group.canonical_representative(s)
            bucket.append(OrbitEntry(rep, group=self.group))
            return True, rep

    def entries(self):
        """All entries, in a deterministic bucket-key order."""
        with self._lock:
            keys = sorted(
                self.buckets,
                key=lambda k: (k.cardinality, k.rank, k.metric_fingerprint))
            return [e for k in keys for e in self.buckets[k]]

    def representatives(self):
        return [e.representative for e in self.entries()]

    def entry_for(self, s):
        s = tuple(sorted(set(s)))
        with self._lock:
            for entry in self.buckets.get(self.key_of(s), ()):
                if entry.representative == s:
                    return entry
        raise KeyError(s)

    def close(self, s):
        self.entry_for(s).status = "closed"

    def open_entries(self):
        return [e for e in self.entries() if e.status == "open"]


def fuse(face_sets, group, subgroup=None, *, rays=None, graph=None):
    """Merge orbits of the inputs under a larger group.

    The inputs are representatives under ``subgroup``; the result stores
    pairwise ``group``-inequivalent representatives covering all of them.
    """
    if subgroup is not None and not group.contains_group(subgroup):
        raise ValueError("fusion group does not contain the source group")
    db = OrbitDatabase(group, rays=rays, graph=graph)
    for s in face_sets:
        db.insert_if_new(s)
    return db


def split(db, subgroup):
    """Break each stored orbit into orbits of a subgroup.

    Returns subgroup-inequivalent representatives whose subgroup-orbits
    union to exactly the original orbits.
    """
    if not db.group.contains_group(subgroup):
        raise ValueError("split group is not a subgroup")
    out = []
    for entry in db.entries():
        out.extend(db.group.double_coset_split(subgroup, entry.representative))
    return out
