"""Command-line front end for the unit-reducibility toolkit.

Every command prints a short human-readable summary; --json switches the
output to the full certificate in canonical JSON (sorted keys, no spaces),
so identical inputs and seeds produce byte-identical bytes.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 an enumeration budget was exceeded (a partial certificate, when one
exists, is still printed).
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from .certify import classify, table1
from .errors import (
    BudgetError,
    ConductorError,
    DegreeError,
    FieldMismatchError,
    LinearAlgebraError,
    NonIntegralError,
    NotTotallyPositiveError,
    VerificationError,
)
from .field import _poly_str, element_to_json_dict, make_field, parse_element
from .realfield import (
    classify_real,
    make_real_field,
    real_witness_2power,
    real_witness_ppower,
    verify_real_witness,
)
from .numtheory import factorize, is_canonical_conductor
from .serialize import dumps_canonical
from .svp import DEFAULT_NODE_CAP, DEFAULT_RESULT_CAP, shortest
from .traceform import gram, require_totally_positive
from .units import eta, is_reduced, mu_star
from .witness import (
    delta_lower_bound,
    eq4_check,
    l75_scan,
    verify_witness,
    witness_closed_ratio,
    witness_for_conductor,
)

DEFAULT_SEED = 12345
COEFF_RANGE = 5  # random integral elements draw coefficients from [-5, 5]


@dataclass
class CommandResult:
    exit_code: int
    text: str = ""
    payload: object = None
    error: str = ""
    json_out: bool = False
    force_json: bool = False  # budget paths print the partial certificate


def _u64(s: str) -> int:
    v = int(s)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _range_pair(s: str) -> tuple[int, int]:
    parts = s.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("range must look like N1..N2")
    lo, hi = int(parts[0]), int(parts[1])
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError("range needs 1 <= N1 <= N2")
    return lo, hi


def _caps(args) -> tuple[int, int]:
    cap = args.budget if args.budget is not None else DEFAULT_NODE_CAP
    return cap, DEFAULT_RESULT_CAP


def _coeff_line(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


def cmd_field(args) -> CommandResult:
    ctx = make_field(args.N)
    e = eta(args.N)
    payload = {
        "kind": "field",
        "conductor": ctx.conductor,
        "degree": ctx.degree,
        "discriminant_abs": str(ctx.discriminant_abs),
        "cyclotomic_poly": list(ctx.cyclo_poly),
        "eta": str(e.eta),
    }
    lines = [
        f"K_{ctx.conductor}: degree {ctx.degree} over Q",
        f"  |discriminant|: {ctx.discriminant_abs}",
        f"  minimal polynomial of zeta: {_poly_str(ctx.cyclo_poly, 'x')}",
        f"  eta: {e.eta} (prime {e.prime}, residue degree {e.residue_degree})",
    ]
    if ctx.conductor >= 3:
        rctx = make_real_field(ctx.conductor)
        payload["real_degree"] = rctx.degree
        payload["real_min_poly"] = list(rctx.min_poly)
        lines.append(
            f"  real subfield K_{ctx.conductor}+: degree {rctx.degree}, "
            f"theta = zeta + 1/zeta with minimal polynomial "
            f"{_poly_str(rctx.min_poly, 'x')}"
        )
    return CommandResult(0, text="\n".join(lines), payload=payload)


def cmd_table1(args) -> CommandResult:
    rows = table1()
    payload = {
        "kind": "table1",
        "rows": [
            {
                "N": r["N"],
                "degree": r["degree"],
                "eta": str(r["eta"]),
                "hermite_pow": str(r["hermite_pow"]),
                "disc_abs": str(r["disc_abs"]),
                "relation": r["relation"],
            }
            for r in rows
        ],
    }
    head = f"{'N':>3} {'deg':>4} {'eta':>4} {'gamma^n':>9} {'|disc|':>9} {'criterion':>10}"
    body = [
        f"{r['N']:>3} {r['degree']:>4} {r['eta']:>4} {str(r['hermite_pow']):>9} "
        f"{str(r['disc_abs']):>9} {r['relation']:>10}"
        for r in rows
    ]
    return CommandResult(0, text="\n".join([head] + body), payload=payload)


def cmd_classify(args) -> CommandResult:
    cert = classify(args.N)
    text = f"K_{args.N}: {cert.verdict}\n  {cert.reason}"
    return CommandResult(0, text=text, payload=cert.to_json_dict())


def cmd_real_classify(args) -> CommandResult:
    cert = classify_real(args.N)
    text = f"K_{args.N}+: {cert.verdict}\n  {cert.reason}"
    return CommandResult(0, text=text, payload=cert.to_json_dict())


def _parsed_element(args):
    ctx = make_field(args.N)
    return parse_element(ctx, args.element)


def cmd_shortest(args) -> CommandResult:
    a = _parsed_element(args)
    g = gram(a)
    require_totally_positive(g)
    node_cap, result_cap = _caps(args)
    rep = shortest(g, node_cap=node_cap, result_cap=result_cap)
    payload = {
        "kind": "shortest",
        "conductor": args.N,
        "element": element_to_json_dict(a),
        **rep.to_json_dict(),
    }
    first = rep.minima[0]
    lines = [
        f"mu(a) = {rep.mu} over K_{args.N}",
        f"  attained by {len(rep.minima)} vectors (up to sign); "
        f"first: {_coeff_line(first.coeffs)}",
        f"  exhaustive below {rep.exhaustive_bound}; nodes visited {rep.nodes}",
    ]
    return CommandResult(0, text="\n".join(lines), payload=payload)


def cmd_mustar(args) -> CommandResult:
    a = _parsed_element(args)
    node_cap, result_cap = _caps(args)
    rep = mu_star(a, node_cap=node_cap, result_cap=result_cap)
    payload = {"element": element_to_json_dict(a), **rep.to_json_dict()}
    trunc = " (list truncated)" if rep.attaining_truncated else ""
    lines = [
        f"mu*(a) = {rep.mu_star} over K_{args.N}  [trace {rep.trace}, mu {rep.mu}]",
        f"  attained by {rep.attaining_count} units (up to sign){trunc}; "
        f"nodes visited {rep.nodes}",
    ]
    return CommandResult(0, text="\n".join(lines), payload=payload)


def cmd_reduced(args) -> CommandResult:
    a = _parsed_element(args)
    node_cap, result_cap = _caps(args)
    cert = is_reduced(a, node_cap=node_cap, result_cap=result_cap)
    payload = {"element": element_to_json_dict(a), **cert.to_json_dict()}
    if cert.reduced:
        text = (
            f"a is reduced over K_{args.N}: no unit goes below Tr(a) = {cert.trace} "
            f"({len(cert.below_trace)} non-unit vectors do)"
        )
    else:
        w = cert.witness_unit
        text = (
            f"a is NOT reduced over K_{args.N}: unit {_coeff_line(w.coeffs)} "
            f"reaches {w.value} < Tr(a) = {cert.trace}"
        )
    return CommandResult(0, text=text, payload=payload)


def cmd_eta(args) -> CommandResult:
    cert = eta(args.N)
    text = (
        f"eta(K_{args.N}) = {cert.eta} "
        f"(prime {cert.prime}, residue degree {cert.residue_degree})"
    )
    return CommandResult(0, text=text, payload=cert.to_json_dict())


def cmd_witness(args) -> CommandResult:
    if not args.verify:
        a = witness_for_conductor(args.N)
        ratio = witness_closed_ratio(args.N)
        payload = {
            "kind": "witness_element",
            "conductor": args.N,
            "coeffs": [str(c) for c in a.coeffs],
            "trace": str(a.trace()),
            "closed_ratio": str(ratio),
        }
        p = factorize(args.N)[0][0]
        shape = "((1+z)(1+1/z))^-1" if p == 2 else "((1-z)(1-1/z))^-1"
        lines = [
            f"witness over K_{args.N}: a = {shape}, trace {a.trace()}",
            f"  coeffs: {_coeff_line(a.coeffs)}",
            f"  certified trace/mu ratio (closed form): {ratio}",
        ]
        return CommandResult(0, text="\n".join(lines), payload=payload)

    node_cap, result_cap = _caps(args)
    cert = verify_witness(args.N, node_cap=node_cap, result_cap=result_cap)
    payload = cert.to_json_dict()
    if cert.status == "budget_exceeded":
        text = (
            f"witness over K_{args.N}: BUDGET EXCEEDED after {cert.nodes} nodes "
            f"(cap {cert.budget['node_cap']}); partial certificate follows"
        )
        return CommandResult(3, text=text, payload=payload, force_json=True)
    lines = [
        f"witness over K_{args.N}: VERIFIED",
        f"  trace {cert.trace_a}, mu {cert.mu_a}, ratio {cert.ratio} "
        f"(closed form {cert.closed_form})",
        f"  reduced: every vector below the trace is a non-unit "
        f"({len(cert.reduced_evidence)} of them); nodes visited {cert.nodes}",
    ]
    return CommandResult(0, text="\n".join(lines), payload=payload)


def cmd_real_witness(args) -> CommandResult:
    if not args.verify:
        fac = factorize(args.N)
        if len(fac) != 1:
            raise ConductorError(
                f"real witnesses exist for prime powers only, got {args.N}"
            )
        p, n = fac[0]
        a = real_witness_2power(n) if p == 2 else real_witness_ppower(p, n)
        shape = "(2+t)^-1" if p == 2 else "(2-t)^-1"
        payload = {
            "kind": "real_witness_element",
            "conductor": args.N,
            "element": a.to_json_dict(),
            "trace": str(a.trace()),
        }
        lines = [
            f"witness over K_{args.N}+: a = {shape}, trace {a.trace()}",
            f"  theta-basis coeffs: {_coeff_line(a.coeffs)}",
        ]
        return CommandResult(0, text="\n".join(lines), payload=payload)

    node_cap, result_cap = _caps(args)
    cert = verify_real_witness(args.N, node_cap=node_cap, result_cap=result_cap)
    payload = cert.to_json_dict()
    if cert.status == "budget_exceeded":
        text = (
            f"witness over K_{args.N}+: BUDGET EXCEEDED after {cert.nodes} nodes "
            f"(cap {cert.budget['node_cap']}); partial certificate follows"
        )
        return CommandResult(3, text=text, payload=payload, force_json=True)
    agrees = "matches" if cert.closed_form_agrees else "DISAGREES with"
    lines = [
        f"witness over K_{args.N}+: VERIFIED",
        f"  trace {cert.trace_a}, mu {cert.mu_exact}, mu* {cert.mu_star}, "
        f"exact ratio {cert.ratio_exact}",
        f"  certified bound mu*/Tr(a^-1) = {cert.bound} "
        f"{agrees} the quoted closed form {cert.quoted_form}",
        f"  reduced: {cert.reduced}; nodes visited {cert.nodes}",
    ]
    return CommandResult(0, text="\n".join(lines), payload=payload)


def cmd_delta_bound(args) -> CommandResult:
    d = delta_lower_bound(args.N)
    text = f"delta(K_{args.N}) >= {d.bound}  [{d.provenance}]"
    return CommandResult(0, text=text, payload=d.to_json_dict())


def cmd_check_eq4(args) -> CommandResult:
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    small, big = args.N, args.M
    ctx_small = make_field(small)
    ctx_big = make_field(big)
    if big % small != 0:
        raise ConductorError(f"{small} does not divide {big}")
    rng = random.Random(seed)
    for trial in range(args.trials):
        a = ctx_small.element(
            [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(ctx_small.degree)]
        )
        y = ctx_big.element(
            [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(ctx_big.degree)]
        )
        rep = eq4_check(a, y)
        if not rep.passed:
            payload = {
                "kind": "eq4_trials",
                "conductor_small": small,
                "conductor_big": big,
                "trials": args.trials,
                "failed_at": trial,
                "seed": seed,
                "passed": False,
                "counterexample": rep.to_json_dict(),
            }
            return CommandResult(
                1,
                payload=payload,
                error=(
                    f"trace-lift identity FAILED at trial {trial} "
                    f"(K_{small} -> K_{big}, seed {seed})"
                ),
                force_json=True,
            )
    payload = {
        "kind": "eq4_trials",
        "conductor_small": small,
        "conductor_big": big,
        "trials": args.trials,
        "seed": seed,
        "passed": True,
    }
    text = (
        f"trace-lift identity: {args.trials}/{args.trials} random trials passed "
        f"(K_{small} -> K_{big}, seed {seed})"
    )
    return CommandResult(0, text=text, payload=payload)


def cmd_l75(args) -> CommandResult:
    box = args.box if args.box is not None else args.p
    rep = l75_scan(args.p, box)
    verdict = "PASS" if rep.passed else "FAIL"
    lines = [
        f"rounding inequality at p={args.p}, box {box}: {verdict}",
        f"  {rep.permutations} permutations x {rep.grid_points} grid points; "
        f"min margin {rep.min_margin} "
        f"(zero at m=0: {rep.zero_at_m_zero}, {rep.zero_margin_count} zeros total)",
        f"  smallest margin on the box wall: {rep.boundary_min_margin}",
    ]
    code = 0 if rep.passed else 1
    err = "" if rep.passed else f"rounding inequality violated at p={args.p}"
    return CommandResult(code, text="\n".join(lines), payload=rep.to_json_dict(), error=err)


def cmd_sweep(args) -> CommandResult:
    lo, hi = args.range
    lines = []
    for n in range(lo, hi + 1):
        if not is_canonical_conductor(n):
            continue
        lines.append(dumps_canonical(classify(n).to_json_dict()))
    return CommandResult(0, text="\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="print the full certificate as canonical JSON"
    )
    common.add_argument(
        "--budget",
        type=_positive_int,
        metavar="NODES",
        help=f"enumeration node cap (default {DEFAULT_NODE_CAP})",
    )
    common.add_argument(
        "--seed",
        type=_u64,
        metavar="SEED",
        help=f"seed for randomized checks (default {DEFAULT_SEED})",
    )

    parser = argparse.ArgumentParser(
        prog="unitred",
        description="exact unit-reducibility computations for cyclotomic fields",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("field", parents=[common], help="summary of the field K_N")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser(
        "table1",
        parents=[common],
        help="reference constants for the six smallest interesting conductors",
    )
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("classify", parents=[common], help="unit-reducibility verdict for K_N")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_classify)

    real = sub.add_parser("real", help="commands for the maximal totally real subfield K_N+")
    real_sub = real.add_subparsers(dest="real_command", metavar="{classify,witness}")
    p = real_sub.add_parser("classify", parents=[common], help="verdict for K_N+")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_real_classify)
    p = real_sub.add_parser("witness", parents=[common], help="half-degree witness at N = p^n")
    p.add_argument("N", type=int)
    p.add_argument("--verify", action="store_true", help="certify by exhaustive enumeration")
    p.set_defaults(func=cmd_real_witness)

    p = sub.add_parser(
        "shortest", parents=[common], help="minimum of the trace form of a over K_N"
    )
    p.add_argument("N", type=int)
    p.add_argument("-a", "--element", required=True, metavar="C0,C1,...")
    p.set_defaults(func=cmd_shortest)

    p = sub.add_parser(
        "mustar", parents=[common], help="minimum of the trace form of a over units"
    )
    p.add_argument("N", type=int)
    p.add_argument("-a", "--element", required=True, metavar="C0,C1,...")
    p.set_defaults(func=cmd_mustar)

    p = sub.add_parser(
        "reduced", parents=[common], help="whether no unit beats u = 1 in the form of a"
    )
    p.add_argument("N", type=int)
    p.add_argument("-a", "--element", required=True, metavar="C0,C1,...")
    p.set_defaults(func=cmd_reduced)

    p = sub.add_parser("eta", parents=[common], help="smallest prime-ideal norm in K_N")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("witness", parents=[common], help="reduction witness at N = p^n")
    p.add_argument("N", type=int)
    p.add_argument("--verify", action="store_true", help="certify by exhaustive enumeration")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser(
        "delta-bound", parents=[common], help="lower bound for the reduction discrepancy"
    )
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_delta_bound)

    p = sub.add_parser(
        "check-eq4",
        parents=[common],
        help="randomized check of the trace-lifting identity K_N -> K_M",
    )
    p.add_argument("N", type=int)
    p.add_argument("M", type=int)
    p.add_argument("--trials", type=_positive_int, default=25, metavar="T")
    p.set_defaults(func=cmd_check_eq4)

    p = sub.add_parser(
        "l75", parents=[common], help="exhaustive scan of the rounding inequality for Q"
    )
    p.add_argument("p", type=int, choices=(3, 5, 7))
    p.add_argument("--box", type=_positive_int, metavar="R", help="box radius (default p)")
    p.set_defaults(func=cmd_l75)

    p = sub.add_parser(
        "sweep", parents=[common], help="classify a range of conductors, one JSON line each"
    )
    p.add_argument("range", type=_range_pair, metavar="N1..N2")
    p.set_defaults(func=cmd_sweep)

    return parser


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    func = getattr(args, "func", None)
    if func is None:
        return CommandResult(2, error="missing command (try --help)")
    try:
        res = func(args)
    except BudgetError as exc:
        return CommandResult(
            3,
            error=(
                f"budget exceeded: {exc} "
                f"(nodes {exc.nodes}, results {exc.results}); raise --budget to retry"
            ),
        )
    except VerificationError as exc:
        return CommandResult(1, error=f"verification failed: {exc}")
    except DegreeError as exc:
        return CommandResult(3, error=str(exc))
    except (
        ConductorError,
        FieldMismatchError,
        NonIntegralError,
        NotTotallyPositiveError,
        LinearAlgebraError,
        ValueError,
        ZeroDivisionError,
    ) as exc:
        return CommandResult(2, error=str(exc))
    res.json_out = bool(getattr(args, "json", False))
    return res


def main(argv: list[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    if res.error:
        print(res.error, file=sys.stderr)
    if res.payload is not None and (res.json_out or res.force_json):
        print(dumps_canonical(res.payload))
    elif res.text:
        print(res.text)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
