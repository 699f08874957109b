"""Unit reducibility verdicts across conductors, with the reasoning shown.

A field is unit reducible when every totally positive a admits a unit at
the minimum of its trace form.  The decisive quantities are eta (the
smallest prime-power residue norm) and the Hermite constant of the degree.
"""

from unitred import classify, classify_real, eta, strong_criterion, table1


def main():
    print("reference constants:")
    print(f"  {'N':>3} {'deg':>4} {'eta':>4} {'gamma^n':>8} {'|disc|':>8} relation")
    for row in table1():
        print(
            f"  {row['N']:>3} {row['degree']:>4} {row['eta']:>4} "
            f"{str(row['hermite_pow']):>8} {row['disc_abs']:>8} {row['relation']}"
        )

    # the two Equal rows are the boundary cases: only finitely many forms
    # to inspect, and inspection says reducible (weakly)
    for n in (8, 9):
        crit = strong_criterion(n)
        print(f"N={n}: both sides equal {crit.lhs}")

    # eta drops to a small prime exactly when some prime has small residue
    # degree; at 15 the residue degree of 2 is 4, so eta(15) = 2^4
    cert = eta(15)
    print(f"eta(15) = {cert.eta} from prime {cert.prime} with residue degree {cert.residue_degree}")

    print("\nverdicts for all canonical conductors up to 30:")
    for n in range(3, 31):
        if n % 4 == 2:
            continue
        cert = classify(n)
        print(f"  {n:>3} {cert.verdict:<11} {cert.reason}")

    print("\nmaximal totally real subfields tell their own story:")
    for n in (15, 16, 23, 32):
        cert = classify_real(n)
        print(f"  K_{n}+ {cert.verdict:<8} {cert.reason}")


if __name__ == "__main__":
    main()
