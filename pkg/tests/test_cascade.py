import pytest

from symcone.cascade import (
    cascade_convert,
    cascade_facet_orbits,
    cascade_states,
    greedy_stabilizer_order,
    simplicial_lift,
    state_ridges,
)
from symcone.conemodel import dual_description_dd, incidence_matrix, make_cone
from symcone.decomp import (
    ConversionTask,
    RecursionPolicy,
    convert,
    expand_orbits,
)
from symcone.exactlin import rank
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


REDUNDANT = make_cone([(1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1)])


def aut_of(cone):
    return restricted_automorphism_group(cone.rays).group


def pairs(facets):
    return sorted((f.support, f.normal) for f in facets)


def expanded_pairs(cone, group, reps):
    return pairs(expand_orbits(cone, group, reps))


def test_lift_identity_for_simplex():
    c = simplex_cone(4)
    lifted, order = simplicial_lift(c)
    assert order == (0, 1, 2, 3)
    assert lifted.rays == c.rays


def test_lift_square():
    c = square_cone()
    lifted, order = simplicial_lift(c)
    assert order == (0, 1, 2, 3)
    assert lifted.nrays == 4 and lifted.dim == 4
    assert rank(lifted.rays) == 4
    assert [w[:3] for w in lifted.rays] == list(c.rays)


def test_lift_reorders_dependent_prefix():
    lifted, order = simplicial_lift(REDUNDANT)
    assert sorted(order) == [0, 1, 2, 3]
    assert rank([REDUNDANT.rays[j] for j in order[:3]]) == 3
    assert [w[:3] for w in lifted.rays] == [REDUNDANT.rays[j] for j in order]


def test_lift_rejects_bad_orders():
    c = square_cone()
    with pytest.raises(ValueError):
        simplicial_lift(c, order=(0, 1, 1, 2))
    with pytest.raises(ValueError):
        simplicial_lift(REDUNDANT, order=(0, 1, 2, 3))
    flat = make_cone([(1, 0), (2, 0)])
    with pytest.raises(ValueError):
        simplicial_lift(flat)


def test_greedy_order_shape():
    for cone in (square_cone(), cube_cone(3), oct_pyr_cone(), REDUNDANT):
        order = greedy_stabilizer_order(cone, aut_of(cone))
        assert sorted(order) == list(range(cone.nrays))
        assert rank([cone.rays[j] for j in order[:cone.dim]]) == cone.dim


def test_single_step_recovers_square():
    c = square_cone()
    states = [st for _, st in cascade_states(c, aut_of(c))]
    assert [st.i for st in states] == [4, 3]
    first = states[0]
    assert all(len(s) == 3 for s, _ in first.facets)
    final = states[-1]
    got = set()
    for s, _ in final.facets:
        got.update(final.group.orbit_of_set(s))
    assert sorted(got) == sorted(
        f.support for f in dual_description_dd(make_cone(final.rays)))


@pytest.mark.parametrize("name", ["cube3", "oct_pyr"])
def test_step_invariant_and_stabilizer_tower(name):
    cone = cube_cone(3) if name == "cube3" else oct_pyr_cone()
    group = aut_of(cone)
    n, d = cone.nrays, cone.dim
    for order, st in cascade_states(cone, group):
        relabelled = group.conjugate(
            tuple(order.index(k) for k in range(n)))
        assert st.group.order() == relabelled.set_stabilizer(
            range(d, st.i)).order()
        expanded = set()
        for s, _ in st.facets:
            expanded.update(st.group.orbit_of_set(s))
        direct = dual_description_dd(make_cone(st.rays))
        assert sorted(expanded) == sorted(f.support for f in direct)


def test_full_runs_match_direct_description():
    for cone in (simplex_cone(5), cube_cone(3), cross_cone(3),
                 oct_pyr_cone(), REDUNDANT):
        group = aut_of(cone)
        reps = cascade_facet_orbits(cone, group)
        assert expanded_pairs(cone, group, reps) == [
            (s, n) for s, n in brute_force_facets(cone.rays)]


def test_expected_orbit_counts():
    for cone, orbits, total in ((simplex_cone(5), 1, 5),
                                (cross_cone(3), 1, 8),
                                (cross_cone(4), 1, 16),
                                (cube_cone(4), 1, 8),
                                (oct_pyr_cone(), 3, 9),
                                (wreath_cone(2, 2), 1, 64)):
        group = aut_of(cone)
        reps = cascade_facet_orbits(cone, group)
        assert len(reps) == orbits
        assert len(expand_orbits(cone, group, reps)) == total


def test_order_does_not_change_result():
    c = cube_cone(3)
    group = aut_of(c)
    want = expanded_pairs(c, group, cascade_facet_orbits(c, group))
    for order in ((0, 1, 2, 4, 3, 5, 6, 7), (0, 1, 2, 4, 7, 6, 5, 3)):
        reps = cascade_facet_orbits(c, group, order=order)
        assert expanded_pairs(c, group, reps) == want


def test_trivial_group_runs():
    c = cross_cone(3)
    reps = cascade_facet_orbits(c, PermGroup(c.nrays))
    assert pairs(reps) == pairs(dual_description_dd(c))


def test_final_state_ridges_of_cube():
    c = cube_cone(3)
    group = aut_of(c)
    for _, st in cascade_states(c, group):
        pass
    ridges = state_ridges(st)
    assert len(ridges) == 1  # the cube's edges form one orbit
    assert len(st.group.orbit_of_set(ridges[0])) == 12
    assert st.ridges == ridges  # cached


def test_rejects_trusted_group():
    c = oct_pyr_cone()
    comb = combinatorial_automorphisms(
        incidence_matrix(c, dual_description_dd(c)))
    task = ConversionTask(c, comb, method="cascade", trust_group=True,
                          policy=RecursionPolicy(base_threshold=4))
    with pytest.raises(ValueError):
        cascade_convert(task)
    with pytest.raises(ValueError):
        convert(task)


def test_convert_dispatches_cascade():
    for cone in (cube_cone(3), oct_pyr_cone(), cross_cone(4)):
        group = aut_of(cone)
        via_dispatch = convert(ConversionTask(
            cone, group, method="cascade",
            policy=RecursionPolicy(base_threshold=4)))
        direct = convert(ConversionTask(cone, group, method="direct"))
        assert expanded_pairs(cone, group, via_dispatch) == \
            expanded_pairs(cone, group, direct)
