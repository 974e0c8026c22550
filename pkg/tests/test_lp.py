import random
from fractions import Fraction

import pytest

from valinterp.linalg import det, inverse, matvec, nullspace, rank, solve
from valinterp.lp import check_certificate, feasibility_lp, fourier_motzkin
from valinterp.polyhedron import DimensionError


def test_examples():
    assert feasibility_lp([((1, 0), 1), ((0, 1), 2)]).solution == (1, 2)
    res = feasibility_lp([((1, 1), 1), ((2, 2), 3)])
    assert not res.feasible
    y = res.certificate
    assert y[0] / -y[1] == 2
    assert check_certificate([[1, 1], [2, 2]], [1, 3], y)
    assert feasibility_lp([((2, 1), 4)]).solution == (2, 0)


def test_sign_infeasibility():
    res = feasibility_lp([((1, 0), 1), ((1, 1), Fraction(1, 2))])
    assert not res.feasible
    assert check_certificate([[1, 0], [1, 1]], [1, Fraction(1, 2)], res.certificate)


def test_dimension_bound():
    with pytest.raises(DimensionError):
        feasibility_lp([((1,) * 7, 1)])
    with pytest.raises(ValueError):
        feasibility_lp([])


def test_random_systems_are_decided_consistently():
    rng = random.Random(31)
    for _ in range(200):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        B = [[rng.randint(-2, 3) for _ in range(n)] for _ in range(m)]
        a = [Fraction(rng.randint(-3, 6), rng.randint(1, 3)) for _ in range(m)]
        rows = list(zip(map(tuple, B), a))
        res = feasibility_lp(rows)
        if res.feasible:
            assert all(v >= 0 for v in res.solution)
            assert matvec(B, res.solution) == a
        else:
            assert check_certificate(B, a, res.certificate)
            assert fourier_motzkin(B, a) == res.certificate


def test_linalg_helpers():
    M = [[2, 1], [1, 1]]
    assert det(M) == 1 and rank(M) == 2
    assert matvec(M, matvec(inverse(M), [3, 4])) == [3, 4]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None
    assert solve([[1, 1]], [2]) == [2, 0]
    ns = nullspace([[1, 1, 0]], 3)
    assert len(ns) == 2 and all(matvec([[1, 1, 0]], v) == [0] for v in ns)
