import random
from fractions import Fraction

from unitred.field import make_field
from unitred.svp import enumerate_below, shortest
from unitred.traceform import gram
from unitred.units import eta, is_reduced, is_unit, mu_star

ETA_TABLE = {5: 5, 7: 7, 8: 2, 9: 3, 12: 4, 15: 16, 16: 2, 25: 5, 27: 3}

# smallest enumeration bounds at which the minimal non-unit norm shows up
ETA_ORACLE_BOUND = {5: 12, 7: 16, 8: 8, 9: 12, 12: 8, 15: 16}


def _rand_totally_positive(rng, ctx):
    while True:
        b = ctx.element([rng.randint(-3, 3) for _ in range(ctx.degree)])
        if not b.is_zero():
            return b * b.conj()


def test_is_unit():
    ctx = make_field(8)
    assert is_unit(ctx.one())
    assert is_unit(-ctx.one())
    assert is_unit(ctx.zeta(3))
    assert not is_unit(ctx.from_rational(2))
    assert not is_unit(ctx.one() + ctx.zeta())  # norm 2
    assert not is_unit(ctx.one() / 2)  # not integral
    k5 = make_field(5)
    assert not is_unit(k5.one() - k5.zeta())  # norm 5
    # cyclotomic unit (1 - z^2)/(1 - z) is integral of norm 1
    u = (k5.one() - k5.zeta(2)) * (k5.one() - k5.zeta()).inverse()
    assert is_unit(u)


def test_eta_table():
    for n, v in ETA_TABLE.items():
        cert = eta(n)
        assert cert.eta == v
        assert cert.prime ** cert.residue_degree == v


def test_eta_against_enumeration_oracle():
    # the minimal |norm| >= 2 among short vectors of the unit form matches
    # the residue-degree formula
    for n, bound in ETA_ORACLE_BOUND.items():
        ctx = make_field(n)
        res = enumerate_below(gram(ctx.one()), Fraction(bound))
        nonunit = [abs(fv.norm) for fv in res.vectors if abs(fv.norm) >= 2]
        assert nonunit, f"no non-unit below {bound} at conductor {n}"
        assert min(nonunit) == ETA_TABLE[n]


def test_eta_scan_is_complete():
    cert = eta(15)
    assert cert.eta == 16
    assert cert.prime == 2
    assert cert.residue_degree == 4
    examined = {p for p, _, _ in cert.examined}
    # every prime below the winning norm was considered
    assert {2, 3, 5, 7, 11, 13} <= examined


def test_mu_star_of_one():
    for n in (5, 8, 12):
        ctx = make_field(n)
        rep = mu_star(ctx.one())
        assert rep.mu_star == ctx.degree
        assert rep.trace == ctx.degree
        assert rep.mu == ctx.degree
        for fv in rep.attaining:
            assert abs(fv.norm) == 1


def test_mu_star_dominates_mu():
    rng = random.Random(601)
    for n in (5, 8, 12):
        ctx = make_field(n)
        for _ in range(12):
            a = _rand_totally_positive(rng, ctx)
            rep = mu_star(a)
            mu = shortest(gram(a)).mu
            assert rep.mu == mu
            assert rep.mu_star >= mu
            assert rep.mu_star <= rep.trace
            has_unit_min = any(
                abs(fv.norm) == 1
                for fv in shortest(gram(a)).minima
            )
            assert (rep.mu_star == mu) == has_unit_min


def test_am_gm_floor():
    # rationalized: value^n >= n^n * norm(a) * norm(x)^2 for enumerated x
    rng = random.Random(602)
    total = 0
    for n in (5, 8, 12):
        ctx = make_field(n)
        deg = ctx.degree
        cases = 0
        while cases < 40:
            a = _rand_totally_positive(rng, ctx)
            res = enumerate_below(gram(a), a.trace())
            for fv in res.vectors:
                x = ctx.element(fv.coeffs)
                lhs = fv.value**deg
                rhs = deg**deg * a.norm() * x.norm() ** 2
                assert lhs >= rhs
                cases += 1
        total += cases
    assert total >= 120


def test_reduced_scale_invariance():
    rng = random.Random(603)
    ctx = make_field(8)
    for _ in range(8):
        a = _rand_totally_positive(rng, ctx)
        base = is_reduced(a).reduced
        for q in (Fraction(1, 2), Fraction(3), Fraction(7, 5)):
            assert is_reduced(a * q).reduced == base


def test_reduced_of_one():
    cert = is_reduced(make_field(12).one())
    assert cert.reduced
    assert cert.mu_star == cert.trace == 4
    assert cert.witness_unit is None


def test_not_reduced_example():
    # 2 + theta over K_5 loses to the unit z + z^3 (= golden-ratio inverse pair)
    ctx = make_field(5)
    a = ctx.element([1, 0, -1, -1])
    cert = is_reduced(a)
    assert a.trace() == 6
    assert not cert.reduced
    assert cert.mu_star == 4
    assert abs(cert.witness_unit.norm) == 1


def test_mu_star_attaining_cap():
    rep = mu_star(make_field(12).one(), attaining_cap=2)
    assert rep.attaining_truncated
    assert len(rep.attaining) == 2
    assert rep.attaining_count > 2


def test_report_json_shapes():
    rep = mu_star(make_field(5).one())
    d = rep.to_json_dict()
    assert d["kind"] == "mu_star"
    assert d["value"] == "4"
    cert = is_reduced(make_field(5).one())
    d = cert.to_json_dict()
    assert d["kind"] == "reduced"
    assert d["value"] is True
    d = eta(8).to_json_dict()
    assert d["kind"] == "eta"
    assert d["value"] == "2"
