"""Exact arithmetic in cyclotomic fields.

The field of conductor N is Q(z) for a primitive N-th root of unity z,
represented on the power basis 1, z, ..., z^(phi(N)-1) with exact rational
coefficients.  Integer coefficient vectors are exactly the ring of integers.
Conductor labels are canonical (N = 1 or N % 4 != 0 mod ... specifically
N % 4 != 2), so every field has one name; N % 4 == 2 is rejected because
that field equals the one of conductor N/2.

No floating point anywhere: traces come from a Moebius closed form, norms
from integer resultants, inverses from the extended Euclidean algorithm
modulo the cyclotomic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConductorError, FieldMismatchError
from .linalg import solve_exact
from .numtheory import (
    divisors,
    euler_phi,
    factorize,
    is_canonical_conductor,
    moebius,
    prime_divisors,
)

# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, constant term first)


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_monic(num, den):
    """Exact division by a monic integer polynomial; returns (quotient, remainder)."""
    assert den[-1] == 1
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    if dn < dd:
        return [], num
    q = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd]
        if c:
            q[k] = c
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    return q, _trim(num)


def _exact_div(a, b):
    q, r = divmod(a, b)
    assert r == 0, "inexact division in subresultant chain"
    return q


def _prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the integers."""
    dv = len(b) - 1
    lc = b[-1]
    r = list(a)
    e = len(a) - 1 - dv + 1
    while len(r) - 1 >= dv and r:
        dr = len(r) - 1
        t = r[-1]
        r = [lc * c for c in r]
        for i in range(dv + 1):
            r[dr - dv + i] -= t * b[i]
        _trim(r)
        e -= 1
    if e > 0:
        f = lc**e
        r = [f * c for c in r]
    return r


def _resultant_int(a, b):
    """Resultant of integer polynomials via the subresultant PRS.

    Divisions in the chain are exact over Z; the assert in _exact_div guards
    the bookkeeping.  Cross-checked in the test suite against products of
    conjugates.
    """
    a = _trim(list(a))
    b = _trim(list(b))
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if (da * db) % 2:
            s = -s
    g = h = 1
    while True:
        delta = da - db
        if (da % 2) and (db % 2):
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a, da = b, db
        den = g * h**delta
        b = [_exact_div(c, den) for c in r]
        db = len(b) - 1
        g = a[-1]
        if delta > 0:
            h = _exact_div(g**delta, h ** (delta - 1))
        if db == 0:
            h = _exact_div(b[0] ** da, h ** (da - 1)) if da > 0 else h
            return s * h


# rational polynomial helpers, used by the inverse


def _poly_divmod_frac(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    dn, dd = len(num) - 1, len(den) - 1
    lc = den[-1]
    if dn < dd:
        return [], _trim(num)
    q = [Fraction(0)] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd] / lc
        if c:
            q[k] = c
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    return q, _trim(num)


def _poly_sub_scaled(a, q, b):
    """a - q*b for coefficient lists (q a polynomial)."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qi in enumerate(q):
        if qi:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] -= qi * bj
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    assert n >= 1
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(poly)


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False, repr=False)
class FieldContext:
    """Immutable per-conductor data: cyclotomic polynomial, reduction tables,
    monomial traces, Galois residues, |discriminant|."""

    conductor: int
    degree: int
    cyclo_poly: tuple[int, ...]
    discriminant_abs: int
    galois_units: tuple[int, ...]
    _zeta_pow: tuple[tuple[int, ...], ...]
    _mono_trace: tuple[Fraction, ...]

    def __repr__(self):
        return f"FieldContext(conductor={self.conductor}, degree={self.degree})"

    # -- element constructors -------------------------------------------------

    def element(self, coeffs) -> "CycloElement":
        """Element from a coefficient sequence on the power basis.

        Shorter sequences are zero-padded to the degree; longer ones are an
        error.  Entries may be ints, Fractions, or strings like "-3/2".
        """
        vals = [Fraction(c) for c in coeffs]
        if len(vals) > self.degree:
            raise ValueError(
                f"expected at most {self.degree} coefficients for conductor "
                f"{self.conductor}, got {len(vals)}"
            )
        vals += [Fraction(0)] * (self.degree - len(vals))
        return CycloElement(self, tuple(vals))

    def zero(self) -> "CycloElement":
        return self.element([])

    def one(self) -> "CycloElement":
        return self.element([1])

    def from_rational(self, q) -> "CycloElement":
        return self.element([Fraction(q)])

    def zeta(self, k: int = 1) -> "CycloElement":
        """z^k for any integer k (reduced mod the conductor)."""
        row = self._zeta_pow[k % self.conductor]
        return CycloElement(self, tuple(Fraction(c) for c in row))

    # -- trace form -----------------------------------------------------------

    def trace_form_entries(self, a: "CycloElement"):
        """Rows of the Gram matrix Tr(a * z^i * conj(z^j)) over the power basis."""
        n, big_n = self.degree, self.conductor
        t = []
        for k in range(big_n):
            acc = Fraction(0)
            for m, c in enumerate(a.coeffs):
                if c:
                    acc += c * self._mono_trace[(m + k) % big_n]
            t.append(acc)
        return [[t[(i - j) % big_n] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def make_field(n: int) -> FieldContext:
    """Context for the cyclotomic field of canonical conductor n."""
    if not isinstance(n, int) or n < 1:
        raise ConductorError(f"conductor must be a positive integer, got {n!r}")
    if not is_canonical_conductor(n):
        raise ConductorError(
            f"conductor {n} is not canonical (N % 4 == 2); use {n // 2} instead"
        )
    phi = euler_phi(n)
    cyclo = cyclotomic_poly(n)
    assert len(cyclo) - 1 == phi

    disc = n**phi
    for p in prime_divisors(n):
        d, r = divmod(phi, p - 1)
        assert r == 0
        q, r = divmod(disc, p**d)
        assert r == 0
        disc = q

    # z^j reduced mod the cyclotomic polynomial, for every j mod n
    red = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        red.append(tuple(cur))
        top = cur[phi - 1]
        nxt = [0] + cur[: phi - 1]
        if top:
            nxt = [nxt[i] - top * cyclo[i] for i in range(phi)]
        cur = nxt
    assert tuple(cur) == red[0] == (1,) + (0,) * (phi - 1)  # z^n = 1

    # Tr(z^j) = phi(n) * moebius(d) / phi(d) with d = n / gcd(j, n)
    mono = []
    for j in range(n):
        d = n // math.gcd(j, n)
        mono.append(Fraction(phi * moebius(d), euler_phi(d)))

    units = tuple(k for k in range(n) if math.gcd(k, n) == 1)
    return FieldContext(
        conductor=n,
        degree=phi,
        cyclo_poly=cyclo,
        discriminant_abs=disc,
        galois_units=units,
        _zeta_pow=tuple(red),
        _mono_trace=tuple(mono),
    )


def _same_field(a: "CycloElement", b: "CycloElement"):
    if a.ctx.conductor != b.ctx.conductor:
        raise FieldMismatchError(
            f"conductor mismatch: {a.ctx.conductor} vs {b.ctx.conductor}"
        )


@dataclass(frozen=True, eq=False, repr=False)
class CycloElement:
    ctx: FieldContext
    coeffs: tuple[Fraction, ...]

    # -- ring structure -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            _same_field(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.ctx, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.ctx, tuple(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloElement(self.ctx, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElement(self.ctx, tuple(x * q for x in self.coeffs))
        if not isinstance(other, CycloElement):
            return NotImplemented
        _same_field(self, other)
        n = self.ctx.degree
        conv = [Fraction(0)] * (2 * n - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:n]
        big_n = self.ctx.conductor
        for k in range(n, 2 * n - 1):
            ck = conv[k]
            if ck:
                row = self.ctx._zeta_pow[k % big_n]
                for t in range(n):
                    if row[t]:
                        out[t] += ck * row[t]
        return CycloElement(self.ctx, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElement(self.ctx, tuple(x / q for x in self.coeffs))
        if isinstance(other, CycloElement):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ctx.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return (
            self.ctx.conductor == other.ctx.conductor and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.conductor, self.coeffs))

    def __repr__(self):
        return f"<K_{self.ctx.conductor}: {_poly_str(self.coeffs, 'z')}>"

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- Galois action ----------------------------------------------------------

    def galois(self, k: int) -> "CycloElement":
        """Image under z -> z^k; k must be a unit mod the conductor."""
        big_n = self.ctx.conductor
        k %= big_n
        if math.gcd(k, big_n) != 1:
            raise ValueError(f"{k} is not invertible mod {big_n}")
        n = self.ctx.degree
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                row = self.ctx._zeta_pow[(i * k) % big_n]
                for t in range(n):
                    if row[t]:
                        out[t] += c * row[t]
        return CycloElement(self.ctx, tuple(out))

    def conj(self) -> "CycloElement":
        """Complex conjugation z -> z^(-1) (identity for conductor 1)."""
        if self.ctx.conductor == 1:
            return self
        return self.galois(self.ctx.conductor - 1)

    # -- invariants --------------------------------------------------------------

    def trace(self) -> Fraction:
        return sum(
            (c * self.ctx._mono_trace[i] for i, c in enumerate(self.coeffs) if c),
            Fraction(0),
        )

    def norm(self) -> Fraction:
        """Field norm, as the resultant of the cyclotomic polynomial and the
        coefficient polynomial (denominators cleared first)."""
        f = _trim([Fraction(c) for c in self.coeffs])
        if not f:
            return Fraction(0)
        if len(f) == 1:
            return f[0] ** self.ctx.degree
        den = math.lcm(*(c.denominator for c in f))
        ints = [int(c * den) for c in f]
        res = _resultant_int(list(self.ctx.cyclo_poly), ints)
        return Fraction(res, den**self.ctx.degree)

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in self.ctx.cyclo_poly]
        r0, r1 = phi, _trim([Fraction(c) for c in self.coeffs])
        t0, t1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _poly_sub_scaled(t0, q, t1)
        assert r1, "cyclotomic polynomial is irreducible; gcd must be a constant"
        c = r1[0]
        _, u = _poly_divmod_frac([x / c for x in t1], phi)
        out = list(u) + [Fraction(0)] * (self.ctx.degree - len(u))
        return CycloElement(self.ctx, tuple(out))

    # -- moving between fields -----------------------------------------------------

    def lift(self, m: int) -> "CycloElement":
        """Image in the field of conductor m (the conductor must divide m)."""
        big_n = self.ctx.conductor
        up = make_field(m)
        if m % big_n != 0:
            raise ConductorError(f"{big_n} does not divide {m}")
        step = m // big_n
        out = [Fraction(0)] * up.degree
        for i, c in enumerate(self.coeffs):
            if c:
                row = up._zeta_pow[(i * step) % m]
                for t in range(up.degree):
                    if row[t]:
                        out[t] += c * row[t]
        return CycloElement(up, tuple(out))

    def relative_trace(self, n: int) -> "CycloElement":
        """Trace down to the subfield of conductor n (n must divide the conductor):
        the sum over automorphisms z -> z^k with k = 1 mod n, written back on the
        subfield's power basis."""
        m = self.ctx.conductor
        down = make_field(n)
        if m % n != 0:
            raise ConductorError(f"{n} does not divide {m}")
        if m == n:
            return self
        total = self.ctx.zero()
        for k in self.ctx.galois_units:
            if k % n == 1 % n:
                total = total + self.galois(k)
        cols = [down.zeta(j).lift(m).coeffs for j in range(down.degree)]
        matrix = [[cols[j][i] for j in range(down.degree)] for i in range(self.ctx.degree)]
        sol = solve_exact(matrix, list(total.coeffs))
        return CycloElement(down, tuple(sol))

    def decompose(self, n: int) -> list["CycloElement"]:
        """Write self = sum_i lift(x_i) * z_M^i with x_i in the subfield of
        conductor n and 0 <= i < M/n.

        Requires every prime of M/n to divide n; then z_M has minimal polynomial
        x^(M/n) - z_n over the subfield, the decomposition is unique, and the
        components are integral exactly when self is.  Prime-power steps are
        peeled off one prime at a time.
        """
        m = self.ctx.conductor
        down = make_field(n)
        if m % n != 0:
            raise ConductorError(f"{n} does not divide {m}")
        if m == n:
            return [self]
        ratio = m // n
        bad = [p for p in prime_divisors(ratio) if n % p != 0]
        if bad:
            raise ConductorError(
                f"decomposition needs every prime of {m}//{n} to divide {n}; "
                f"offending primes: {bad}"
            )
        fac = factorize(ratio)
        if len(fac) == 1:
            return self._decompose_prime_power(down)
        p, e = fac[0]
        mid = m // p**e
        outer = self.decompose(mid)
        r_out = p**e
        out: list[CycloElement | None] = [None] * ratio
        for i, y in enumerate(outer):
            inner = y.decompose(n)
            for j, x in enumerate(inner):
                out[i + j * r_out] = x
        return out  # type: ignore[return-value]

    def _decompose_prime_power(self, down: FieldContext) -> list["CycloElement"]:
        up = self.ctx
        r = up.conductor // down.conductor
        d = down.degree
        cols = []
        for i in range(r):
            zi = up.zeta(i)
            for j in range(d):
                cols.append((zi * down.zeta(j).lift(up.conductor)).coeffs)
        matrix = [[cols[c][row] for c in range(len(cols))] for row in range(up.degree)]
        sol = solve_exact(matrix, list(self.coeffs))
        return [
            CycloElement(down, tuple(sol[i * d : (i + 1) * d])) for i in range(r)
        ]


def recompose(components, m: int) -> CycloElement:
    """Inverse of decompose: sum_i lift(x_i) * z_m^i."""
    up = make_field(m)
    total = up.zero()
    for i, x in enumerate(components):
        total = total + x.lift(m) * up.zeta(i)
    return total


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_element(ctx: FieldContext, text: str) -> CycloElement:
    """Parse "c0,c1,..." with integer or p/q entries; whitespace is ignored.
    Fewer than degree-many entries are zero-padded."""
    parts = [p.strip() for p in text.strip().split(",")]
    if parts == [""]:
        raise ValueError("empty element text")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coefficient in element text: {exc}") from exc
    return ctx.element(vals)


def element_to_json_dict(a: CycloElement) -> dict:
    return {
        "conductor": a.ctx.conductor,
        "coeffs": [str(c) for c in a.coeffs],
    }


def element_from_json_dict(d: dict) -> CycloElement:
    return make_field(int(d["conductor"])).element(d["coeffs"])


def _poly_str(coeffs, var: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        if c == 1:
            t = mono
        elif c == -1:
            t = f"-{mono}"
        else:
            t = f"{c}*{mono}"
        terms.append(t)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
