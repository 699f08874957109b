"""Exact lattice tools: LLL reduction and bounded enumeration.

Everything here is rational: LLL runs on an integer Gram matrix with the
transform and Gram kept in integers and the orthogonalization in Fractions,
and enumeration uses integer square roots for interval endpoints with an
exact predicate fixup.  A successful run is therefore a proof, not an
approximation; post-conditions are re-verified and raise VerificationError
on any internal inconsistency.

Enumeration returns each nonzero vector once up to sign, with a canonical
representative (first nonzero coordinate positive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetError, VerificationError
from .linalg import det_exact
from .traceform import GramMatrix, ldl

DEFAULT_DELTA = Fraction(99, 100)
DEFAULT_NODE_CAP = 10_000_000
DEFAULT_RESULT_CAP = 1_000_000


def _coerce_gram(g):
    """(scale, integer rows, element-or-None) from a GramMatrix or raw rows."""
    if isinstance(g, GramMatrix):
        s, rows = g.integer_scale()
        return s, rows, g.element
    rows = [[Fraction(c) for c in row] for row in g]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("Gram matrix must be square")
    if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
        raise ValueError("Gram matrix must be symmetric")
    s = 1
    for row in rows:
        for c in row:
            s = s * c.denominator // math.gcd(s, c.denominator)
    return s, [[int(c * s) for c in row] for row in rows], None


def quadratic_value(rows, v) -> Fraction:
    """v * G * v^T."""
    acc = Fraction(0)
    for i, vi in enumerate(v):
        if vi:
            acc += vi * sum(rows[i][j] * vj for j, vj in enumerate(v) if vj)
    return acc


# ---------------------------------------------------------------------------
# LLL


@dataclass(frozen=True)
class LLLResult:
    """transform is unimodular with transform * G * transform^T == gram."""

    transform: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    delta: Fraction


def _gso(w):
    """Gram-Schmidt data (mu, B) of the basis whose Gram matrix is w."""
    n = len(w)
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            num = Fraction(w[i][j])
            for k in range(j):
                num -= mu[i][k] * mu[j][k] * b[k]
            mu[i][j] = num / b[j]
        bi = Fraction(w[i][i])
        for k in range(i):
            bi -= mu[i][k] ** 2 * b[k]
        b[i] = bi
        if bi <= 0:
            raise ValueError("Gram matrix is not positive definite")
    return mu, b


def lll_reduce(g, delta: Fraction = DEFAULT_DELTA) -> LLLResult:
    """LLL-reduce the lattice with the given integer (or exactly scalable)
    Gram matrix.  Returns the unimodular transform and the reduced Gram of
    the scaled integer matrix; a common scale factor does not change which
    bases are reduced."""
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must be in (1/4, 1)")
    _, rows, _ = _coerce_gram(g)
    n = len(rows)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    w = [list(r) for r in rows]
    if n <= 1:
        if n == 1 and w[0][0] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        return LLLResult(_int_rows(u), _int_rows(w), delta)
    mu, b = _gso(w)

    def size_reduce(k, j):
        q = (2 * mu[k][j] + 1) // 2  # nearest integer, ties down
        if q == 0:
            return
        u[k] = [u[k][t] - q * u[j][t] for t in range(n)]
        wkk = w[k][k] - 2 * q * w[k][j] + q * q * w[j][j]
        for t in range(n):
            if t != k:
                w[k][t] -= q * w[j][t]
                w[t][k] = w[k][t]
        w[k][k] = wkk
        for t in range(j):
            mu[k][t] -= q * mu[j][t]
        mu[k][j] -= q

    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            size_reduce(k, j)
        if b[k] >= (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            k += 1
        else:
            u[k - 1], u[k] = u[k], u[k - 1]
            w[k - 1], w[k] = w[k], w[k - 1]
            for row in w:
                row[k - 1], row[k] = row[k], row[k - 1]
            mu, b = _gso(w)
            k = max(k - 1, 1)

    _verify_lll(rows, u, w, mu, b, delta)
    return LLLResult(_int_rows(u), _int_rows(w), delta)


def _int_rows(m):
    return tuple(tuple(int(c) for c in row) for row in m)


def _verify_lll(g, u, w, mu, b, delta):
    n = len(g)
    d = det_exact([[Fraction(c) for c in row] for row in u])
    if d not in (1, -1):
        raise VerificationError(f"LLL transform is not unimodular (det {d})")
    for i in range(n):
        for j in range(n):
            got = sum(u[i][s] * g[s][t] * u[j][t] for s in range(n) for t in range(n))
            if got != w[i][j]:
                raise VerificationError("LLL Gram bookkeeping mismatch")
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                raise VerificationError(f"basis not size-reduced at ({i},{j})")
    for i in range(1, n):
        if b[i] < (delta - mu[i][i - 1] ** 2) * b[i - 1]:
            raise VerificationError(f"Lovasz condition fails at {i}")


# ---------------------------------------------------------------------------
# bounded enumeration


@dataclass(frozen=True)
class FoundVector:
    coeffs: tuple[int, ...]
    value: Fraction
    norm: Fraction | None = None

    def to_json_dict(self) -> dict:
        d = {"coeffs": [str(c) for c in self.coeffs], "value": str(self.value)}
        if self.norm is not None:
            d["norm"] = str(self.norm)
        return d


@dataclass(frozen=True)
class EnumerationResult:
    bound: Fraction
    vectors: tuple[FoundVector, ...]  # ascending (value, coeffs)
    nodes: int


def _floor_sqrt(q: Fraction) -> int:
    """floor(sqrt(q)) for q >= 0."""
    return math.isqrt(q.numerator * q.denominator) // q.denominator


def enumerate_below(
    g,
    bound,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    result_cap: int = DEFAULT_RESULT_CAP,
    annotate_norms: bool = True,
) -> EnumerationResult:
    """Every nonzero vector v, up to sign, with v G v^T <= bound (inclusive).

    G must be positive definite, so the list is finite and the enumeration is
    exhaustive; exceeding node_cap or result_cap raises BudgetError.  When G
    came from a trace form, each vector is annotated with the field norm of
    the corresponding element.
    """
    bound = Fraction(bound)
    scale, rows, element = _coerce_gram(g)
    n = len(rows)
    target = bound * scale  # enumerate v rows v^T <= target in integers
    if bound < 0:
        return EnumerationResult(bound, (), 0)

    red = lll_reduce(rows)
    u = red.transform
    dec = ldl(red.gram)
    if dec.status != "positive_definite":
        raise ValueError(f"Gram matrix is not positive definite ({dec.status})")
    dvec = dec.pivots
    low = dec.lower
    # nonzero subdiagonal entries of L, by column
    cols = [
        [(j, low[j][lvl]) for j in range(lvl + 1, n) if low[j][lvl]]
        for lvl in range(n)
    ]

    nodes = 0
    found: list[tuple[Fraction, tuple[int, ...]]] = []
    v = [0] * n

    def recurse(lvl: int, rem: Fraction, used: Fraction):
        nonlocal nodes
        c = Fraction(0)
        for j, lj in cols[lvl]:
            c += lj * v[j]
        r = rem / dvec[lvl]

        # exact endpoints of -sqrt(r) <= t + c <= sqrt(r): integer-sqrt guess,
        # then a one-step fixup with one-sided exact predicates
        s = _floor_sqrt(r)
        hi = math.floor(Fraction(s) - c)
        d = hi + 1 + c
        if d <= 0 or d * d <= r:
            hi += 1
        lo = math.ceil(Fraction(-s) - c)
        d = lo - 1 + c
        if d >= 0 or d * d <= r:
            lo -= 1
        if lvl == n - 1:
            lo = max(lo, 0)  # half space: each +-v pair visited once
        for t in range(lo, hi + 1):
            nodes += 1
            if nodes > node_cap:
                raise BudgetError(
                    f"enumeration exceeded node cap {node_cap}", nodes=nodes,
                    results=len(found),
                )
            v[lvl] = t
            step = dvec[lvl] * (t + c) ** 2
            if lvl == 0:
                if any(v):
                    found.append((used + step, tuple(v)))
                    if len(found) > result_cap:
                        raise BudgetError(
                            f"enumeration exceeded result cap {result_cap}",
                            nodes=nodes, results=len(found),
                        )
            else:
                recurse(lvl - 1, rem - step, used + step)
        v[lvl] = 0

    recurse(n - 1, target, Fraction(0))

    out = []
    for val, vec in found:
        # drop the -v twin that can appear when the top coordinate is 0
        last = next(c for c in reversed(vec) if c)
        if last < 0:
            continue
        coords = [sum(vec[i] * u[i][t] for i in range(n)) for t in range(n)]
        first = next(c for c in coords if c)
        if first < 0:
            coords = [-c for c in coords]
        out.append((val / scale, tuple(coords)))
    out.sort(key=lambda pair: (pair[0], pair[1]))

    vectors = []
    for val, coords in out:
        norm = None
        if annotate_norms and element is not None:
            norm = element.ctx.element(coords).norm()
        vectors.append(FoundVector(coeffs=coords, value=val, norm=norm))
    return EnumerationResult(bound=bound, vectors=tuple(vectors), nodes=nodes)


@dataclass(frozen=True)
class MinimaReport:
    """Minimum of the form and every vector attaining it (up to sign)."""

    mu: Fraction
    minima: tuple[FoundVector, ...]
    exhaustive_bound: Fraction
    nodes: int

    def to_json_dict(self) -> dict:
        return {
            "mu": str(self.mu),
            "minima": [m.to_json_dict() for m in self.minima],
            "exhaustive_bound": str(self.exhaustive_bound),
            "nodes_visited": self.nodes,
        }


def shortest(
    g,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    result_cap: int = DEFAULT_RESULT_CAP,
) -> MinimaReport:
    """Exact minimum of the positive-definite form and all attaining vectors.

    The initial bound is the smallest diagonal entry of the LLL-reduced Gram,
    which some lattice vector attains, so the enumeration below it is
    exhaustive and the reported minimum is certified.
    """
    scale, rows, _ = _coerce_gram(g)
    red = lll_reduce(rows)
    start = Fraction(min(red.gram[i][i] for i in range(len(rows))), scale)
    if start <= 0:
        raise ValueError("Gram matrix is not positive definite")
    res = enumerate_below(g, start, node_cap=node_cap, result_cap=result_cap)
    assert res.vectors, "a basis vector attains the starting bound"
    mu = res.vectors[0].value
    minima = tuple(fv for fv in res.vectors if fv.value == mu)
    return MinimaReport(mu=mu, minima=minima, exhaustive_bound=res.bound, nodes=res.nodes)
