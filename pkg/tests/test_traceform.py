import random
from fractions import Fraction

import pytest

from unitred.errors import NotTotallyPositiveError
from unitred.field import make_field
from unitred.linalg import mat_mul, transpose
from unitred.svp import shortest
from unitred.traceform import (
    embedding_values,
    gram,
    is_totally_positive,
    ldl,
    require_totally_positive,
)

CONDUCTORS = (5, 8, 9, 12, 15, 16)


def _rand_elem(rng, ctx, lo=-4, hi=4):
    return ctx.element([rng.randint(lo, hi) for _ in range(ctx.degree)])


def _rand_totally_positive(rng, ctx):
    while True:
        b = _rand_elem(rng, ctx)
        if not b.is_zero():
            return b * b.conj()


def test_gram_of_one_is_scaled_identity_for_8():
    g = gram(make_field(8).one())
    assert g.entries == (
        (4, 0, 0, 0),
        (0, 4, 0, 0),
        (0, 0, 4, 0),
        (0, 0, 0, 4),
    )


def test_gram_rejects_non_real():
    with pytest.raises(ValueError, match="not totally real"):
        gram(make_field(8).zeta())


def test_gram_symmetry_and_form_evaluation():
    rng = random.Random(401)
    for n in CONDUCTORS:
        ctx = make_field(n)
        cases = 0
        while cases < 40:
            a = _rand_totally_positive(rng, ctx)
            g = gram(a)
            rows = g.entries
            assert rows == tuple(tuple(r) for r in zip(*rows))
            x = _rand_elem(rng, ctx)
            z = x.coeffs
            quad = sum(
                rows[i][j] * z[i] * z[j]
                for i in range(g.dim)
                for j in range(g.dim)
            )
            assert quad == (a * x * x.conj()).trace()
            cases += 1


def test_gram_det_is_disc_times_norm():
    rng = random.Random(402)
    for n in CONDUCTORS:
        ctx = make_field(n)
        for _ in range(50):
            a = _rand_totally_positive(rng, ctx)
            assert gram(a).det() == ctx.discriminant_abs * a.norm()


def test_integer_scale():
    ctx = make_field(8)
    g = gram(ctx.one())
    s, rows = g.integer_scale()
    assert s == 1
    assert rows == [[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]]
    h = gram(ctx.one() / 3)
    s, rows = h.integer_scale()
    assert s == 3
    assert rows == [[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]]


def test_ldl_round_trip_and_status():
    rng = random.Random(403)
    for n in (5, 12, 16):
        ctx = make_field(n)
        for _ in range(20):
            g = gram(_rand_totally_positive(rng, ctx))
            res = ldl(g)
            assert res.status == "positive_definite"
            assert all(p > 0 for p in res.pivots)
            lower = res.lower
            d = len(res.pivots)
            diag = [
                [res.pivots[i] if i == j else Fraction(0) for j in range(d)]
                for i in range(d)
            ]
            back = mat_mul(mat_mul(lower, diag), transpose(lower))
            assert [list(map(Fraction, row)) for row in g.entries] == back


def test_ldl_detects_failures():
    assert ldl([[Fraction(0)]]).status == "singular"
    assert ldl([[Fraction(-1)]]).status == "indefinite"
    assert ldl([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]).status == "singular"
    res = ldl([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])
    assert res.status == "indefinite_or_singular"
    assert res.failure_index == 0


def test_totally_positive_decision():
    rng = random.Random(404)
    ctx = make_field(12)
    for _ in range(30):
        b = _rand_elem(rng, ctx)
        if b.is_zero():
            continue
        pos = b * b.conj()
        assert is_totally_positive(pos)
        assert not is_totally_positive(-pos)
    with pytest.raises(NotTotallyPositiveError):
        require_totally_positive(gram(-ctx.one()))


def test_positive_definite_iff_embeddings_positive():
    # the exact decision agrees with the floating diagnostic on clear cases
    rng = random.Random(405)
    ctx = make_field(5)
    for _ in range(40):
        b = _rand_elem(rng, ctx)
        c = b + b.conj()  # totally real, arbitrary signs
        if c.is_zero():
            continue
        vals = embedding_values(c)
        assert all(abs(v.imag) < 1e-9 for v in vals)  # c is totally real
        reals = [v.real for v in vals]
        if min(reals) > 1e-9:
            assert is_totally_positive(c)
        elif min(reals) < -1e-9:
            assert not is_totally_positive(c)


def test_embedding_values_match_trace_and_norm():
    rng = random.Random(406)
    for n in (5, 12):
        ctx = make_field(n)
        for _ in range(25):
            a = _rand_elem(rng, ctx)
            vals = embedding_values(a)
            assert len(vals) == ctx.degree
            total = sum(vals)
            prod = complex(1.0)
            for v in vals:
                prod *= v
            assert abs(total - float(a.trace())) < 1e-6
            assert abs(prod - float(a.norm())) < 1e-4 * max(1.0, abs(float(a.norm())))


def test_minimum_of_reference_form_over_8():
    # the boundary form ((1+z)(1+1/z))^-1 at conductor 8 has minimum 4
    ctx = make_field(8)
    x = ctx.one() + ctx.zeta()
    a = (x * x.conj()).inverse()
    assert shortest(gram(a)).mu == 4
