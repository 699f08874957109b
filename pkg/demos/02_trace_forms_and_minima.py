"""Trace forms as exact lattices: Gram matrices, positivity, shortest vectors.

The quadratic form z -> Tr(a x conj(x)) with x = sum z_i zeta^i is the
object everything else in the package is built on.  This script builds a
few of these forms, checks positivity exactly, and enumerates minima.
"""

from unitred import (
    boundary_analysis,
    enumerate_below,
    gram,
    is_totally_positive,
    ldl,
    make_field,
    shortest,
)


def main():
    k8 = make_field(8)
    g1 = gram(k8.one())
    print("Gram of the trivial form over K_8 (scaled identity):")
    for row in g1.entries:
        print("  ", [str(x) for x in row])

    # total positivity decides whether the form is a lattice at all
    z = k8.zeta()
    a = 2 + z + z.conj()
    print("a = 2 + z + conj(z): totally positive?", is_totally_positive(a))
    print("a - 3:               totally positive?", is_totally_positive(a - 3))

    # the exact LDL factorization certifies positive definiteness
    fac = ldl(gram(a))
    print("LDL status for gram(a):", fac.status, " pivots:", [str(d) for d in fac.pivots])

    # shortest vectors of the trivial K_8 form: the basis itself
    rep = shortest(g1)
    print(f"mu over K_8 = {rep.mu}, attained by {len(rep.minima)} vectors (up to sign)")

    # the boundary form at N = 8: minimum 4 reached by units AND by 1+zeta_8
    b = boundary_analysis(8)
    print(f"boundary form at 8: trace {b.trace}, mu {b.minima.mu}")
    print(f"  {b.unit_minima} minima are units, {b.nonunit_minima} have |norm| {b.x_norm_abs}")
    print("  so the minimum does not certify reducedness failure here")

    # raw enumeration below any bound, exhaustively and exactly
    res = enumerate_below(gram(k8.one()), 6)
    print(f"vectors with form value <= 6: {len(res.vectors)} ({res.nodes} nodes visited)")
    smallest = res.vectors[0]
    print("  first:", smallest.coeffs, "value", smallest.value, "norm", smallest.norm)


if __name__ == "__main__":
    main()
