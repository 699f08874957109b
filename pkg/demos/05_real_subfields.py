"""Maximal totally real subfields: where halving the dimension pays off.

K_N+ = Q(theta) with theta = zeta + 1/zeta has half the degree of K_N, so
enumeration reaches conductors (like 32) whose full field is out of range.
The lift/project pair moves elements between the two levels exactly.

Two findings surface along the way: the certified real bounds at 25 and 27
are smaller than their quoted closed forms, and the prime-power relation
mu*(a) = mu*(lift(a))/2 genuinely fails at the composite conductor 12.
"""

from unitred import (
    embed,
    is_unit,
    make_field,
    make_real_field,
    project,
    real_mu_relations_check,
    real_sqrt_of_unit,
    verify_real_witness,
)


def main():
    r16 = make_real_field(16)
    print(f"K_16+ has degree {r16.degree}, minimal polynomial coefficients {r16.min_poly}")

    t = r16.theta()
    x = 1 + t - t**2
    print("x = 1 + theta - theta^2: trace", x.trace(), "norm", x.norm())
    print("  lifted to K_16: trace", embed(x).trace(), "(doubled), norm", embed(x).norm(), "(squared)")
    assert project(embed(x)) == x

    print("\nreal witness certificates (dimension halved, budgets friendly):")
    for n in (32, 25, 27, 23):
        cert = verify_real_witness(n)
        tag = "matches quoted form" if cert.closed_form_agrees else f"quoted form {cert.quoted_form} NOT attained"
        print(f"  K_{n}+: mu* / mu_upper = {cert.mu_star}/{cert.mu_upper} = {cert.bound}  ({tag})")

    print("\nthe prime-power identity mu*_real = mu*_lift / 2 and its limits:")
    r5 = make_real_field(5)
    th = r5.theta()
    rel = real_mu_relations_check((1 + th) ** 2)
    print(f"  K_5+, a = (1+theta)^2: {rel.mu_star_real} vs {rel.mu_star_lift}/2 -> holds: {rel.star_identity}")

    r12 = make_real_field(12)
    a = r12.element([17, 8])  # 17 + 8 theta, theta = sqrt(3)
    rel = real_mu_relations_check(a)
    print(f"  K_12+, a = 17 + 8 theta: {rel.mu_star_real} vs {rel.mu_star_lift}/2 -> holds: {rel.star_identity}")
    print("  (only the inequality mu*_real >= mu*_lift / 2 survives at composite N)")

    # the obstruction: a unit of K_12 whose relative norm is not a unit square
    k12 = make_field(12)
    u = k12.one() - k12.zeta()
    w = project(u * u.conj())
    print(f"\n1 - zeta_12 is a unit: {is_unit(u)}; u * conj(u) projects to 2 - theta")
    print("  real unit square root of 2 - theta:", real_sqrt_of_unit(w))
    print("  yet (2-theta)(2+theta) = 1, so it is a unit; it just is not a square")


if __name__ == "__main__":
    main()
