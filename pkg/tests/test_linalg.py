import random
from fractions import Fraction

import pytest

from unitred.errors import LinearAlgebraError
from unitred.linalg import (
    det_exact,
    identity,
    invert_exact,
    mat_mul,
    mat_vec,
    solve_exact,
    transpose,
)


def _rand_matrix(rng, n, m=None, lo=-9, hi=9):
    m = n if m is None else m
    return [[Fraction(rng.randint(lo, hi)) for _ in range(m)] for _ in range(n)]


def test_identity_and_products():
    rng = random.Random(201)
    for _ in range(50):
        n = rng.randint(1, 5)
        a = _rand_matrix(rng, n)
        assert mat_mul(a, identity(n)) == [[Fraction(x) for x in row] for row in a]
        v = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        assert mat_vec(identity(n), v) == v


def test_transpose_involution():
    rng = random.Random(202)
    a = _rand_matrix(rng, 4, 6)
    assert transpose(transpose(a)) == a


def test_solve_square_random():
    rng = random.Random(203)
    solved = 0
    while solved < 60:
        n = rng.randint(1, 6)
        a = _rand_matrix(rng, n)
        if det_exact(a) == 0:
            continue
        x_true = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
        b = mat_vec(a, x_true)
        assert solve_exact(a, b) == x_true
        solved += 1


def test_solve_tall_full_column_rank():
    # overdetermined but consistent: the bridge between the half- and
    # full-degree bases solves exactly this shape
    rng = random.Random(204)
    for _ in range(40):
        m, n = 6, 3
        a = _rand_matrix(rng, m, n)
        cols = transpose(a)
        if det_exact([[sum(c1[i] * c2[i] for i in range(m)) for c2 in cols] for c1 in cols]) == 0:
            continue  # column-rank deficient; skip
        x_true = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        b = mat_vec(a, x_true)
        assert solve_exact(a, b) == x_true


def test_solve_singular_raises():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises(LinearAlgebraError):
        solve_exact(a, [Fraction(1), Fraction(1)])


def test_solve_inconsistent_tall_raises():
    a = [[Fraction(1)], [Fraction(1)]]
    with pytest.raises(LinearAlgebraError):
        solve_exact(a, [Fraction(0), Fraction(1)])


def test_det_multiplicative():
    rng = random.Random(205)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = _rand_matrix(rng, n)
        b = _rand_matrix(rng, n)
        assert det_exact(mat_mul(a, b)) == det_exact(a) * det_exact(b)


def test_det_known():
    assert det_exact([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(2)]]) == 3
    assert det_exact(identity(7)) == 1


def test_invert_round_trip():
    rng = random.Random(206)
    done = 0
    while done < 40:
        n = rng.randint(1, 5)
        a = _rand_matrix(rng, n)
        if det_exact(a) == 0:
            continue
        inv = invert_exact(a)
        eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        assert mat_mul(a, inv) == eye
        assert mat_mul(inv, a) == eye
        done += 1


def test_invert_singular_raises():
    with pytest.raises(LinearAlgebraError):
        invert_exact([[Fraction(0)]])
