"""Tests for the exact linear-algebra and LP layer."""

from fractions import Fraction
from random import Random

import pytest

from symcone.exactlin import (
    LexVal,
    dot,
    identity,
    integer_primitive,
    inverse,
    is_redundant_generator,
    kernel_basis,
    lex_independent_rows,
    lp_solve,
    mat_mul,
    mat_vec,
    oriented_primitive,
    rank,
    solve_linear,
    transpose,
)

from oracles import fm_optimize

F = Fraction


def test_rank_basics():
    assert rank(identity(3)) == 3
    assert rank([(0, 0, 0, 0), (0, 0, 0, 0)]) == 0
    assert rank([(1, 0), (0, 1), (1, 1)]) == 2


def test_kernel_basis_basics():
    assert kernel_basis(identity(2)) == ()
    k = kernel_basis([(1, 1, 1)])
    assert len(k) == 2
    for row in k:
        assert dot(row, (1, 1, 1)) == 0
    assert rank(k) == 2
    k = kernel_basis([(1, -1, 0), (0, 1, -1)])
    assert len(k) == 1
    x, y, z = k[0]
    assert x == y == z != 0
    assert kernel_basis([], ncols=3) == identity(3)


def test_solve_linear_basics():
    assert solve_linear(identity(2), (F(2, 3), -1)) == (F(2, 3), F(-1))
    x = solve_linear([(1, 1)], (0,))
    assert x[0] + x[1] == 0
    assert solve_linear([(1, 0), (1, 0)], (1, 2)) is None


def test_inverse():
    m = ((1, 2), (3, 4))
    assert mat_mul(m, inverse(m)) == identity(2)
    with pytest.raises(ValueError):
        inverse(((1, 2), (2, 4)))


def _rand_matrix(rng, rows, cols):
    return [tuple(F(rng.randint(-4, 4), rng.choice((1, 1, 2, 3))) for _ in range(cols))
            for _ in range(rows)]


def test_rank_kernel_relation_random():
    rng = Random(2024)
    for _ in range(60):
        m = _rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert rank(m) == len(m) - len(kernel_basis(transpose(m)))
        for krow in kernel_basis(m):
            assert all(v == 0 for v in mat_vec(m, krow))


def test_solve_linear_random_substitution():
    rng = Random(77)
    for _ in range(60):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = _rand_matrix(rng, rows, cols)
        x0 = tuple(F(rng.randint(-3, 3)) for _ in range(cols))
        b = mat_vec(m, x0)
        x = solve_linear(m, b)
        assert x is not None
        assert mat_vec(m, x) == tuple(b)


def test_lex_independent_rows():
    rows = [(1, 1), (2, 2), (0, 1), (5, 0)]
    assert lex_independent_rows(rows) == [0, 2]
    assert lex_independent_rows(rows, want=1) == [0]
    assert lex_independent_rows([(0, 0), (0, 0)]) == []


def test_primitive_scaling():
    assert integer_primitive((F(2, 3), F(-4, 3))) == (1, -2)
    assert integer_primitive((0, 0)) == (0, 0)
    assert oriented_primitive((-1, 2)) == (1, -2)
    assert oriented_primitive((0, F(-1, 2), F(3, 2))) == (0, 1, -3)


def test_lexval_arithmetic():
    a = LexVal((1, 2, 3))
    b = LexVal((1, 2, 4))
    assert a < b and b > a and a != b
    assert a + b == LexVal((2, 4, 7))
    assert b - a == LexVal((0, 0, 1))
    assert -a == LexVal((-1, -2, -3))
    assert 2 * a == a * 2 == LexVal((2, 4, 6))
    assert a / 2 == LexVal((F(1, 2), 1, F(3, 2)))
    assert a > 0 and a >= 1 and a < 2
    assert LexVal((1, 0, 0)) == 1
    assert LexVal((0, -1, 5)) < 0
    assert a.constant == 1
    assert bool(LexVal((0, 0, 0))) is False
    with pytest.raises(TypeError):
        a * b
    with pytest.raises(ValueError):
        a + LexVal((1, 2))


def test_lp_basic_verdicts():
    res = lp_solve((1,), [((1,), 0), ((-1,), -1)])
    assert res.status == "optimal"
    assert res.certificate == (1,)
    assert res.value == 1

    res = lp_solve((1,), [((1,), 0)])
    assert res.status == "unbounded"
    assert res.certificate[0] > 0

    res = lp_solve((1,), [((1,), 1), ((-1,), 0)])
    assert res.status == "infeasible"
    y = res.certificate
    assert y[0] * 1 + y[1] * -1 == 0 and y[0] * 1 + y[1] * 0 > 0


def test_lp_with_equalities():
    # max x + y on the segment x = y, 0 <= x <= 2
    res = lp_solve((1, 1), [((1, 0), 0), ((-1, 0), -2)], [((1, -1), 0)])
    assert res.status == "optimal"
    assert res.certificate == (2, 2)
    assert res.value == 4

    res = lp_solve((1, 0), [], [((1, -1), 0)])
    assert res.status == "unbounded"
    r = res.certificate
    assert r[0] == r[1] and r[0] > 0

    res = lp_solve((0, 0), [], [((1, 0), 1), ((1, 0), 2)])
    assert res.status == "infeasible"


def test_lp_redundant_rows():
    # duplicated constraints force the redundant-row cleanup path
    res = lp_solve((1, 1), [((1, 1), 0)] * 3, [((1, -1), 0), ((2, -2), 0)])
    assert res.status == "unbounded"


def test_lp_matches_fourier_motzkin_on_random_systems():
    rng = Random(4096)
    agree = {"optimal": 0, "unbounded": 0, "infeasible": 0}
    for _ in range(160):
        n = rng.randint(1, 4)
        obj = tuple(rng.randint(-3, 3) for _ in range(n))
        ineqs = [(tuple(rng.randint(-3, 3) for _ in range(n)), rng.randint(-3, 3))
                 for _ in range(rng.randint(0, 6))]
        eqs = [(tuple(rng.randint(-2, 2) for _ in range(n)), rng.randint(-2, 2))
               for _ in range(rng.randint(0, 2))]
        res = lp_solve(obj, ineqs, eqs)
        status, sup = fm_optimize(obj, ineqs, eqs)
        assert res.status == status
        if status == "optimal":
            assert res.value == sup
        agree[status] += 1
    assert min(agree.values()) > 5  # the corpus exercises every verdict


def test_lp_lexval_rhs():
    # max x subject to x <= 1 + e1 and x <= 1 + e2: the second bound
    # is tighter because e2 << e1
    ineqs = [
        ((-1,), LexVal((-1, -1, 0))),
        ((-1,), LexVal((-1, 0, -1))),
        ((1,), 0),
    ]
    res = lp_solve((1,), ineqs)
    assert res.status == "optimal"
    assert res.value == LexVal((1, 0, 1))
    assert res.value.constant == 1

    # perturbation resolves degeneracy: the tight set at the optimum of the
    # perturbed problem is unambiguous
    res = lp_solve((1, 1),
                   [((-1, 0), LexVal((0, -1, 0))),
                    ((0, -1), LexVal((0, 0, -1))),
                    ((-1, -1), LexVal((0, -1, -1)))])
    assert res.status == "optimal"
    x, y = res.certificate
    assert x == LexVal((0, 1, 0)) and y == LexVal((0, 0, 1))


def test_lp_lexval_infeasible_certificate():
    res = lp_solve((0,), [((1,), LexVal((1, 1))), ((-1,), LexVal((-1, 0)))])
    # x >= 1 + e and x <= 1 cannot both hold
    assert res.status == "infeasible"


def test_redundant_generator():
    square = [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]
    # witness f = (-1, -1/2, 1/2) separates ray 0 from the others
    f = (F(-1), F(-1, 2), F(1, 2))
    assert dot(f, square[1]) == 0
    assert dot(f, square[2]) >= 0 and dot(f, square[3]) >= 0
    assert dot(f, square[0]) < 0
    assert is_redundant_generator(square, 0, equality_set={1}) is False

    simplex_rays = identity(3)
    for i in range(3):
        assert is_redundant_generator(simplex_rays, i) is False

    dup = [(1, 0), (0, 1), (1, 0)]
    assert is_redundant_generator(dup, 2) is True

    inner = [(1, 0), (0, 1), (1, 1)]
    assert is_redundant_generator(inner, 2) is True
    assert is_redundant_generator(inner, 0) is False

    with pytest.raises(IndexError):
        is_redundant_generator(inner, 5)
