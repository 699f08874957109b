import random
from fractions import Fraction

import pytest

from unitred.errors import ConductorError, DegreeError
from unitred.field import make_field
from unitred.traceform import ldl
from unitred.witness import (
    delta_lower_bound,
    eq4_check,
    l75_scan,
    q_eval,
    q_matrix,
    rho,
    rho_closed,
    verify_witness,
    witness_2power,
    witness_closed_ratio,
    witness_for_conductor,
    witness_ppower,
)

# trace of the witness at N = p^n: 2^(2n-4) for p = 2, p^(2n-2)(p^2-1)/12 odd
WITNESS_TRACE = {
    8: Fraction(4),
    16: Fraction(16),
    32: Fraction(64),
    5: Fraction(2),
    25: Fraction(50),
    9: Fraction(6),
    27: Fraction(54),
    7: Fraction(4),
    49: Fraction(196),
}

# trace/mu ratio, floored at 1
WITNESS_RATIO = {
    8: Fraction(1),
    16: Fraction(2),
    32: Fraction(4),
    64: Fraction(8),
    5: Fraction(1),
    25: Fraction(5, 2),
    9: Fraction(1),
    27: Fraction(3),
    7: Fraction(1),
    49: Fraction(14, 3),
    121: Fraction(11),
    13: Fraction(7, 6),
    23: Fraction(2),
}

RHO_CONDUCTORS = (8, 16, 9, 27, 5, 25)


def test_witness_construction_inverts():
    for n, big_n in ((3, 8), (4, 16)):
        a = witness_2power(n)
        ctx = a.ctx
        assert ctx.conductor == big_n
        x = ctx.one() + ctx.zeta()
        assert a * x * x.conj() == ctx.one()
    for p, n in ((3, 1), (3, 2), (5, 1), (5, 2), (7, 1)):
        a = witness_ppower(p, n)
        ctx = a.ctx
        assert ctx.conductor == p**n
        x = ctx.one() - ctx.zeta()
        assert a * x * x.conj() == ctx.one()


def test_witness_traces_match_closed_forms():
    for n, t in WITNESS_TRACE.items():
        assert witness_for_conductor(n).trace() == t


def test_witness_closed_ratios():
    for n, r in WITNESS_RATIO.items():
        assert witness_closed_ratio(n) == r


def test_witness_needs_prime_power():
    with pytest.raises(ConductorError):
        witness_for_conductor(12)
    with pytest.raises(ValueError):
        witness_2power(2)  # conductor 4 has no such witness


def test_verify_witness_16():
    cert = verify_witness(16)
    assert cert.status == "verified"
    assert cert.trace_a == 16
    assert cert.mu_a == 8
    assert cert.ratio == 2
    assert cert.closed_form == 2
    assert cert.reduced
    assert cert.mu_attained_at_expected is True  # mu = phi(16), attained at 1+z
    assert len(cert.reduced_evidence) == 8
    for fv in cert.reduced_evidence:
        assert abs(fv.norm) >= 2


def test_verify_witness_floored_cases():
    # at 8, 9 and 5 the ratio floors at 1, so mu equals the trace
    for n in (8, 9, 5):
        cert = verify_witness(n)
        assert cert.status == "verified"
        assert cert.ratio == 1
        assert cert.mu_a == cert.trace_a
        assert cert.reduced
        assert cert.reduced_evidence == ()


def test_verify_witness_degree_guard():
    with pytest.raises(DegreeError):
        verify_witness(49)


def test_verify_witness_budget_partial():
    cert = verify_witness(27, node_cap=1500)
    assert cert.status == "budget_exceeded"
    assert cert.trace_a == 54
    assert cert.mu_a is None
    assert cert.budget["node_cap"] == 1500
    d = cert.to_json_dict()
    assert d["kind"] == "discrepancy_witness"
    assert d["status"] == "budget_exceeded"
    assert "mu_a" not in d


def test_rho_identity():
    rng = random.Random(801)
    for n in RHO_CONDUCTORS:
        ctx = make_field(n)
        for _ in range(200):
            z = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(ctx.degree)]
            direct = rho(n, z)
            assert direct == rho_closed(n, z)
            x = ctx.element(z)
            assert direct == (x * x.conj()).trace()


def test_rho_rejects_bad_length():
    with pytest.raises(ValueError):
        rho(8, [1, 2])
    with pytest.raises(ConductorError):
        rho_closed(12, [1, 2, 3, 4])


def test_q_eval_identity():
    rng = random.Random(802)
    for _ in range(500):
        p = rng.choice((3, 5, 7, 11))
        m = [Fraction(rng.randint(-9, 9)) for _ in range(p - 1)]
        s = sum(m)
        sq = sum(c * c for c in m)
        assert q_eval(p, m) == p * sq - s * s


def test_q_matrix_is_positive_definite():
    for p in (3, 5, 7, 11):
        rows = [[Fraction(x) for x in row] for row in q_matrix(p)]
        res = ldl(rows)
        assert res.status == "positive_definite"
        assert res.pivots[0] == p - 1
        assert all(piv > 0 for piv in res.pivots)


def test_q_matrix_evaluates_q():
    rng = random.Random(803)
    for p in (3, 5, 7):
        rows = q_matrix(p)
        for _ in range(30):
            m = [rng.randint(-6, 6) for _ in range(p - 1)]
            quad = sum(
                rows[i][j] * m[i] * m[j]
                for i in range(p - 1)
                for j in range(p - 1)
            )
            assert q_eval(p, m) == quad


def test_l75_scans_pass():
    for p, box in ((3, 3), (5, 3), (7, 2)):
        rep = l75_scan(p, box)
        assert rep.passed
        assert rep.min_margin == 0
        assert rep.zero_at_m_zero
        assert rep.permutations == [2, 24, 720][(3, 5, 7).index(p)]
        assert rep.grid_points == (2 * box + 1) ** (p - 1)
        assert rep.boundary_min_margin > 0


def test_l75_guards():
    with pytest.raises(ValueError):
        l75_scan(11, 2)
    with pytest.raises(ValueError):
        l75_scan(3, 0)


def test_eq4_random_trials():
    rng = random.Random(804)
    for small, big, trials in ((3, 9, 40), (5, 25, 20), (4, 8, 40)):
        ctx_s = make_field(small)
        ctx_b = make_field(big)
        for _ in range(trials):
            a = ctx_s.element([rng.randint(-5, 5) for _ in range(ctx_s.degree)])
            y = ctx_b.element([rng.randint(-5, 5) for _ in range(ctx_b.degree)])
            rep = eq4_check(a, y)
            assert rep.passed
            assert rep.components == ctx_b.degree // ctx_s.degree
            d = rep.to_json_dict()
            assert d["kind"] == "trace_lift_identity"


def test_relative_trace_kronecker():
    # Tr from the 16th to the 8th field kills odd zeta powers and doubles even
    k16 = make_field(16)
    k8 = make_field(8)
    for k in range(16):
        got = k16.zeta(k).relative_trace(8)
        if k % 2 == 0:
            assert got == k8.zeta(k // 2) * 2
        else:
            assert got.is_zero()


def test_delta_bounds():
    expected = {
        1: Fraction(1),
        8: Fraction(1),
        12: Fraction(1),
        16: Fraction(2),
        32: Fraction(4),
        25: Fraction(5, 2),
        27: Fraction(3),
        13: Fraction(7, 6),
        23: Fraction(2),
        49: Fraction(14, 3),
        400: Fraction(5, 2),
    }
    for n, b in expected.items():
        assert delta_lower_bound(n).bound == b


def test_delta_bound_provenance():
    d = delta_lower_bound(25)
    assert d.source_divisor == 25
    assert d.desk_verifiable
    assert "desk-verifiable" in d.provenance
    d = delta_lower_bound(49)
    assert d.source_divisor == 49
    assert not d.desk_verifiable
    assert "not desk-verified" in d.provenance
    d = delta_lower_bound(3)
    assert d.bound == 1
    assert d.floored
    d = delta_lower_bound(1)
    assert d.bound == 1
    assert d.source_divisor is None
    j = delta_lower_bound(16).to_json_dict()
    assert j["kind"] == "delta_lower_bound"
    assert j["value"] == "2"


def test_delta_monotone_under_divisibility():
    rng = random.Random(805)
    checked = 0
    while checked < 60:
        n = rng.randint(1, 200)
        mult = rng.randint(1, 12)
        m = n * mult
        assert delta_lower_bound(n).bound <= delta_lower_bound(m).bound
        checked += 1
