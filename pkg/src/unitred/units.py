"""Unit minima of trace forms, reducedness certificates, and the smallest
prime-ideal norm.

For totally positive a, the quadratic form q(u) = Tr(a * u * conj(u)) takes
the value Tr(a) at u = 1.  Its minimum over all nonzero integers is mu(a);
its minimum over units is mu*(a); a is reduced when no unit beats u = 1.
All three are decided by one exhaustive enumeration up to Tr(a), with the
norm of every candidate checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConductorError
from .numtheory import is_canonical_conductor, multiplicative_order, primes
from .svp import DEFAULT_NODE_CAP, DEFAULT_RESULT_CAP, FoundVector, enumerate_below
from .traceform import gram, require_totally_positive

ATTAINING_CAP = 512


def is_unit(x) -> bool:
    """True for integral elements of norm +-1."""
    return x.is_integral() and abs(x.norm()) == 1


def _scan_to_trace(a, node_cap, result_cap):
    g = gram(a)
    require_totally_positive(g)
    t = a.trace()
    res = enumerate_below(g, t, node_cap=node_cap, result_cap=result_cap)
    assert res.vectors and res.vectors[0].value <= t
    return t, res


@dataclass(frozen=True)
class MuStarReport:
    """mu*(a) with the units attaining it.

    attaining lists at most ATTAINING_CAP units (up to sign);
    attaining_count is the true number, attaining_truncated flags a cut.
    mu is the unconstrained minimum of the same form, which the enumeration
    yields for free.
    """

    element: object
    trace: Fraction
    mu: Fraction
    mu_star: Fraction
    attaining: tuple[FoundVector, ...]
    attaining_count: int
    attaining_truncated: bool
    nodes: int

    @property
    def conductor(self) -> int:
        return self.element.ctx.conductor

    def to_json_dict(self) -> dict:
        return {
            "kind": "mu_star",
            "conductor": self.conductor,
            "value": str(self.mu_star),
            "evidence": {
                "trace": str(self.trace),
                "mu": str(self.mu),
                "attaining_units": [fv.to_json_dict() for fv in self.attaining],
                "attaining_count": self.attaining_count,
                "attaining_truncated": self.attaining_truncated,
                "nodes_visited": self.nodes,
            },
        }


def mu_star(
    a,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    result_cap: int = DEFAULT_RESULT_CAP,
    attaining_cap: int = ATTAINING_CAP,
) -> MuStarReport:
    """Minimum of Tr(a u conj(u)) over units u, by exhaustive enumeration up
    to Tr(a) (the value at u = 1, so the search bound is always attained)."""
    t, res = _scan_to_trace(a, node_cap, result_cap)
    level = None
    attaining = []
    count = 0
    for fv in res.vectors:
        if level is not None and fv.value > level:
            break
        if abs(fv.norm) == 1:
            if level is None:
                level = fv.value
            count += 1
            if len(attaining) < attaining_cap:
                attaining.append(fv)
    assert level is not None, "u = 1 is a unit with value Tr(a)"
    return MuStarReport(
        element=a,
        trace=t,
        mu=res.vectors[0].value,
        mu_star=level,
        attaining=tuple(attaining),
        attaining_count=count,
        attaining_truncated=count > len(attaining),
        nodes=res.nodes,
    )


@dataclass(frozen=True)
class ReducednessCertificate:
    """Decision of mu*(a) == Tr(a), with checkable evidence.

    When reduced, below_trace is the complete list of vectors of value
    strictly under Tr(a), every one annotated with its (non-unit) norm.
    When not, witness_unit is a unit with a strictly smaller value.
    """

    element: object
    reduced: bool
    trace: Fraction
    mu_star: Fraction
    witness_unit: FoundVector | None
    below_trace: tuple[FoundVector, ...]
    nodes: int

    @property
    def conductor(self) -> int:
        return self.element.ctx.conductor

    def to_json_dict(self) -> dict:
        ev = {
            "trace": str(self.trace),
            "mu_star": str(self.mu_star),
            "below_trace": [fv.to_json_dict() for fv in self.below_trace],
            "nodes_visited": self.nodes,
        }
        if self.witness_unit is not None:
            ev["witness_unit"] = self.witness_unit.to_json_dict()
        return {
            "kind": "reduced",
            "conductor": self.conductor,
            "value": self.reduced,
            "evidence": ev,
        }


def is_reduced(
    a,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    result_cap: int = DEFAULT_RESULT_CAP,
) -> ReducednessCertificate:
    """Whether no unit does strictly better than u = 1 in the form of a."""
    t, res = _scan_to_trace(a, node_cap, result_cap)
    below = tuple(fv for fv in res.vectors if fv.value < t)
    witness = next((fv for fv in below if abs(fv.norm) == 1), None)
    return ReducednessCertificate(
        element=a,
        reduced=witness is None,
        trace=t,
        mu_star=t if witness is None else witness.value,
        witness_unit=witness,
        below_trace=below,
        nodes=res.nodes,
    )


@dataclass(frozen=True)
class EtaCertificate:
    """Smallest norm of a prime ideal, with the primes examined as evidence.

    For a rational prime p with p^v exactly dividing the conductor n, primes
    above p have norm p^f with f the multiplicative order of p mod n/p^v.
    Any prime p >= the best norm found cannot improve it, so the scan below
    that bound is complete.
    """

    conductor: int
    eta: int
    prime: int
    residue_degree: int
    examined: tuple[tuple[int, int, int], ...]  # (p, f, p**f)

    def to_json_dict(self) -> dict:
        return {
            "kind": "eta",
            "conductor": self.conductor,
            "value": str(self.eta),
            "evidence": {
                "prime": self.prime,
                "residue_degree": self.residue_degree,
                "examined": [
                    {"prime": p, "residue_degree": f, "norm": str(nrm)}
                    for p, f, nrm in self.examined
                ],
            },
        }


def eta(n: int) -> EtaCertificate:
    """Least prime-ideal norm in the cyclotomic field of conductor n."""
    if not isinstance(n, int) or n < 1 or not is_canonical_conductor(n):
        raise ConductorError(f"conductor {n} is not canonical")
    best = best_p = best_f = None
    examined = []
    for p in primes():
        if best is not None and p >= best:
            break
        m = n
        while m % p == 0:
            m //= p
        f = multiplicative_order(p, m)
        nrm = p**f
        examined.append((p, f, nrm))
        if best is None or nrm < best:
            best, best_p, best_f = nrm, p, f
    return EtaCertificate(
        conductor=n,
        eta=best,
        prime=best_p,
        residue_degree=best_f,
        examined=tuple(examined),
    )
