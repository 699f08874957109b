"""Tour of exact cyclotomic arithmetic: elements, traces, norms, lifting.

Everything here is computed over Q with Fraction coefficients; nothing is
approximated.  Run top to bottom, read the printed story.
"""

from fractions import Fraction

from unitred import dumps_canonical, element_to_json_dict, make_field


def main():
    k12 = make_field(12)
    print(f"K_12 has degree {k12.degree}, discriminant magnitude {k12.discriminant_abs}")

    z = k12.zeta()
    print("zeta_12 as coefficients on the power basis:", [str(c) for c in z.coeffs])
    print("zeta_12^12 =", [str(c) for c in (z**12).coeffs], "(back to 1)")

    # trace and norm are exact integers for integral elements
    a = 1 + z - z**3
    print("a = 1 + z - z^3")
    print("  trace:", a.trace(), " norm:", a.norm(), " integral:", a.is_integral())

    # conjugation pairs with norm: N(a * conj(a)) is a square
    aa = a * a.conj()
    print("  a * conj(a) has trace", aa.trace(), "and norm", aa.norm(), "=", a.norm(), "^2")

    # division is exact too
    b = a / (2 + z)
    print("  a / (2+z) has rational coefficients, e.g. first:", b.coeffs[0])
    assert b * (2 + z) == a

    # moving between conductors: lift K_3 into K_9 and come back
    k3 = make_field(3)
    w = k3.zeta()
    lifted = w.lift(9)
    print("zeta_3 lifted to K_9 is zeta_9^3:", [str(c) for c in lifted.coeffs])
    print("its components over the K_3 basis:", [[str(x) for x in c.coeffs] for c in lifted.decompose(3)])

    # relative trace scales constants by the degree ratio
    one9 = k3.one().lift(9)
    print("Tr_{K_9/K_3}(1) =", one9.relative_trace(3).coeffs[0])

    # canonical JSON for any element, scalars as exact strings
    x = k12.element([Fraction(1, 3), 0, -2, 0])
    print("JSON form:", dumps_canonical(element_to_json_dict(x)))


if __name__ == "__main__":
    main()
