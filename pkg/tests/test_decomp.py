from random import Random

import pytest

from symcone.conemodel import (
    dual_description_dd,
    facet_from_support,
    homogenize,
    incidence_matrix,
    make_cone,
    reduce_to_pointed_fulldim,
)
from symcone.decomp import (
    Bank,
    BankEntry,
    ConversionDepthError,
    ConversionTask,
    RecursionPolicy,
    balinski_skip,
    bank_lookup,
    bank_store,
    convert,
    expand_orbits,
    family_fingerprint,
    order_by_incidence_number,
    recursive_convert,
    verify_group_action,
)
from symcone.permgrp import PermGroup
from symcone.symdetect import (
    combinatorial_automorphisms,
    restricted_automorphism_group,
)

from cases import (
    cross_cone,
    cube_cone,
    oct_pyr_cone,
    simplex_cone,
    square_cone,
    wreath_cone,
)
from oracles import brute_force_facets


def aut_of(cone):
    return restricted_automorphism_group(cone.rays).group


def pairs(facets):
    return sorted((f.support, f.normal) for f in facets)


def task_for(cone, group=None, **kw):
    group = aut_of(cone) if group is None else group
    kw.setdefault("policy", RecursionPolicy(base_threshold=4))
    return ConversionTask(cone, group, **kw)


def check_complete(cone, group, reps):
    assert pairs(expand_orbits(cone, group, reps)) == [
        (s, n) for s, n in brute_force_facets(cone.rays)]


def test_cube_adjacency_single_orbit():
    c = cube_cone(3)
    reps = convert(task_for(c, method="adjacency"))
    assert len(reps) == 1
    check_complete(c, aut_of(c), reps)


def test_octahedron_single_orbit():
    c = cross_cone(3)
    for method in ("incidence", "adjacency"):
        reps = convert(task_for(c, method=method))
        assert len(reps) == 1
        check_complete(c, aut_of(c), reps)


def test_simplex_single_orbit():
    c = simplex_cone(5)
    reps = convert(task_for(c, method="adjacency"))
    assert len(reps) == 1
    assert expand_orbits(c, aut_of(c), reps) == dual_description_dd(c)


def test_cube_trivial_group_all_facets():
    c = cube_cone(3)
    reps = convert(task_for(c, PermGroup(8), method="adjacency"))
    assert pairs(reps) == pairs(dual_description_dd(c))


def test_oct_pyr_orbit_counts():
    c = oct_pyr_cone()
    group = aut_of(c)
    assert group.order() == 4
    for method in ("incidence", "adjacency", "direct"):
        reps = convert(task_for(c, group, method=method))
        assert len(reps) == 3
        assert sorted(
            group.order() // group.set_stabilizer(f.support).order()
            for f in reps) == [1, 4, 4]
        check_complete(c, group, reps)


def test_oct_pyr_combinatorial_group_trusted():
    c = oct_pyr_cone()
    inc = incidence_matrix(c, dual_description_dd(c))
    comb = combinatorial_automorphisms(inc)
    assert comb.order() == 48
    with pytest.raises(ValueError):
        verify_group_action(c, comb)  # exceeds the restricted group
    reps = convert(task_for(c, comb, method="adjacency", trust_group=True))
    assert len(reps) == 2  # all eight sides fuse under the octahedral group
    check_complete(c, comb, reps)
    with pytest.raises(ValueError):
        convert(task_for(c, comb, method="incidence", trust_group=True))


def test_method_agreement_corpus():
    rng = Random(5)
    corpus = [square_cone(), cube_cone(3), cross_cone(3), simplex_cone(4),
              oct_pyr_cone(), cube_cone(4)]
    for _ in range(3):
        pts = {tuple(rng.randint(0, 1) for _ in range(4)) for _ in range(9)}
        corpus.append(reduce_to_pointed_fulldim(homogenize(sorted(pts))))
    for cone in corpus:
        group = aut_of(cone)
        want = pairs(convert(task_for(cone, group, method="direct")))
        for method in ("incidence", "adjacency"):
            got = pairs(convert(task_for(cone, group, method=method)))
            assert got == want, (cone.rays, method)
        trivial = pairs(convert(task_for(cone, PermGroup(cone.nrays),
                                         method="adjacency")))
        assert trivial == pairs(dual_description_dd(cone))


def test_wreath_one_orbit():
    c = wreath_cone(2, 2)
    group = aut_of(c)
    reps = convert(ConversionTask(c, group, method="adjacency"))
    assert len(reps) == 1
    expanded = expand_orbits(c, group, reps)
    assert len(expanded) == 64
    assert pairs(expanded) == pairs(dual_description_dd(c))


def test_four_cube_recursive():
    c = cube_cone(4)
    group = aut_of(c)
    for threshold in (4, 8):
        reps = convert(ConversionTask(
            c, group, method="adjacency",
            policy=RecursionPolicy(base_threshold=threshold)))
        assert len(reps) == 1
        assert len(expand_orbits(c, group, reps)) == 8


def test_mixed_methods_by_depth():
    c = cube_cone(4)
    reps = convert(ConversionTask(
        c, aut_of(c), method=("adjacency", "incidence"),
        policy=RecursionPolicy(base_threshold=4)))
    assert len(reps) == 1


def test_balinski_on_off_agree():
    for cone in (cube_cone(3), oct_pyr_cone(), cross_cone(3)):
        group = aut_of(cone)
        on = convert(task_for(cone, group, balinski=True))
        off = convert(task_for(cone, group, balinski=False))
        assert pairs(on) == pairs(off)


def test_balinski_skip_rule():
    assert balinski_skip([], 5)
    assert not balinski_skip([((0, 1), 4)], 5)  # d-1 = 4 is not enough
    assert balinski_skip([((0, 1), 3)], 5)
    assert not balinski_skip([((0,), 2), ((1,), 2)], 5)


def test_order_by_incidence_number():
    faces = [(0, 1, 2, 3, 4), (5, 6, 7), (0, 2, 4, 6)]
    assert order_by_incidence_number(faces) == [
        (5, 6, 7), (0, 2, 4, 6), (0, 1, 2, 3, 4)]
    ties = [(2, 1), (0, 3), (4, 5)]
    assert order_by_incidence_number(ties) == ties
    assert order_by_incidence_number([]) == []


def test_verify_group_action():
    c = cube_cone(3)
    verify_group_action(c, aut_of(c))
    swap_two = tuple([1, 0] + list(range(2, 8)))
    with pytest.raises(ValueError):
        verify_group_action(c, PermGroup(8, [swap_two]))
    with pytest.raises(ValueError):
        verify_group_action(c, PermGroup(5))  # degree mismatch


def test_convert_input_checks():
    flat = make_cone([(1, 0, 0), (0, 1, 0)])
    with pytest.raises(ValueError):
        convert(ConversionTask(flat, PermGroup(2)))
    unpointed = make_cone([(1, 0), (-1, 0), (0, 1)])
    with pytest.raises(ValueError):
        convert(ConversionTask(unpointed, PermGroup(3)))


def test_depth_exhaustion():
    c = cube_cone(3)
    with pytest.raises(ConversionDepthError) as err:
        recursive_convert(ConversionTask(
            c, aut_of(c), policy=RecursionPolicy(max_depth=0,
                                                 base_threshold=0)))
    assert err.value.cone is c


def test_bank_hit_on_isomorphic_subcones():
    c = cross_cone(3)
    bank = Bank()
    reps = convert(task_for(c, PermGroup(c.nrays), bank=bank))
    plain = convert(task_for(c, PermGroup(c.nrays)))
    assert pairs(reps) == pairs(plain)
    # every triangle subcone after the first is matched by isomorphism
    assert bank.misses == 1
    assert bank.hits >= 4


def test_bank_reused_across_recursion_levels():
    c = cube_cone(4)
    bank = Bank()
    reps = convert(ConversionTask(
        c, PermGroup(c.nrays), bank=bank,
        policy=RecursionPolicy(base_threshold=4)))
    assert pairs(reps) == pairs(dual_description_dd(c))
    # one miss for the first cube facet, one for its first square ridge;
    # every later isomorphic subcone is answered from the bank
    assert bank.misses == 2
    assert bank.hits >= 1


def test_bank_lookup_and_transport():
    bank = Bank()
    c = cube_cone(3)
    assert bank_lookup(bank, c) is None
    group = aut_of(c)
    reps = convert(task_for(c, group))
    bank_store(bank, BankEntry(family_fingerprint(c.rays), c.rays,
                               tuple(f.support for f in reps), group))
    bank_store(bank, BankEntry(family_fingerprint(c.rays), c.rays,
                               tuple(f.support for f in reps), group))
    assert sum(len(v) for v in bank.buckets.values()) == 1  # idempotent
    shuffled = make_cone(tuple(reversed(c.rays)), homogenized=True)
    hit = bank_lookup(bank, shuffled)
    assert hit is not None
    entry, sigma, _matrix = hit
    moved = [tuple(sorted(sigma[i] for i in sup))
             for sup in entry.facet_orbit_reps]
    transported_group = entry.group.conjugate(sigma)
    # the transported representatives expand to the full facet list
    facets = expand_orbits(shuffled, transported_group,
                           [facet_from_support(shuffled, s) for s in moved])
    assert pairs(facets) == pairs(dual_description_dd(shuffled))


def test_threads_match_serial():
    c4 = cube_cone(4)
    group = aut_of(c4)
    serial = convert(ConversionTask(
        c4, group, policy=RecursionPolicy(base_threshold=4)))
    threaded = convert(ConversionTask(
        c4, group, threads=4, policy=RecursionPolicy(base_threshold=4)))
    assert pairs(serial) == pairs(threaded)
    op = oct_pyr_cone()
    a = convert(task_for(op, PermGroup(7), threads=3))
    b = convert(task_for(op, PermGroup(7)))
    assert pairs(a) == pairs(b)
