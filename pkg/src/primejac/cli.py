"""Command-line interface.

Subcommands map one-to-one onto the library surface:

    classify     full realizability report for (p, g)
    solve-b      witnesses for one multiplicity profile
    build-curve  superelliptic model for one branch profile
    verify       run the whole identity suite for (p, g)
    catalog      closed-form p=3 catalog
    kernel       null space of the convolution-by-j operator

Exit codes: 0 success, 2 invalid input, 3 violated internal identity.
"""

from __future__ import annotations

import argparse
import json
import sys

from .admissible import MultiplicityProfile, enumerate_admissible, validate_instance
from .catalog import (
    P3_PPAV_NOTE,
    cross_check_p3,
    expected_p3_realizable_count,
    full_report,
    p3_catalog,
    report_to_csv,
    report_to_json,
    report_to_table,
)
from .curves import build_curve, differential_multiplicities
from .cyclotomic import parse_rational
from .errors import InternalInvariantError, InvalidInputError
from .groupfun import conv_by_j_matrix, kernel_basis, odd_part
from .lefschetz import identity_suite, lefschetz_check
from .realizability import (
    BranchProfile,
    a_from_b,
    brute_force_b,
    divisibility_propagates,
    solve_b,
)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_INVARIANT_VIOLATION = 3


def _int_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidInputError(f"expected comma-separated integers, got {text!r}") from exc


def _rational_list(text: str) -> list:
    try:
        return [parse_rational(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"expected comma-separated rationals, got {text!r}") from exc


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_classify(args) -> int:
    instance = validate_instance(args.p, args.g)
    report = full_report(instance, verify=args.verify)
    if args.format == "json":
        text = report_to_json(report) + "\n"
    elif args.format == "csv":
        text = report_to_csv(report)
    else:
        text = report_to_table(report)
    _emit(text, args.out)
    if args.verify and any(r.lefschetz_holds is False for r in report.rows):
        return EXIT_INVARIANT_VIOLATION
    return EXIT_OK


def _cmd_solve_b(args) -> int:
    instance = validate_instance(args.p, args.g)
    values = _int_list(args.a)
    profile = MultiplicityProfile.from_values(instance, values)
    witnesses = solve_b(profile)
    payload = {
        "p": instance.p,
        "g": instance.g,
        "a": list(profile.a.values),
        "jacobian_compatible": bool(witnesses),
        "witnesses": [list(w.b.values) for w in witnesses],
    }
    _emit(json.dumps(payload, ensure_ascii=False) + "\n", args.out)
    return EXIT_OK


def _cmd_build_curve(args) -> int:
    instance = validate_instance(args.p, args.g)
    values = _int_list(args.b)
    branch = BranchProfile.from_values(instance, values)
    alphas = _rational_list(args.alphas) if args.alphas else None
    curve = build_curve(branch, alphas)
    if args.equation:
        _emit(curve.equation_string() + "\n", args.out)
    else:
        _emit(json.dumps(curve.to_json_dict(), ensure_ascii=False) + "\n", args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    instance = validate_instance(args.p, args.g)
    lines = []
    failures = 0

    def check(name: str, ok: bool, detail: str = ""):
        nonlocal failures
        status = "ok" if ok else "FAILED"
        suffix = f" ({detail})" if detail else ""
        lines.append(f"{name}: {status}{suffix}")
        if not ok:
            failures += 1

    profiles = enumerate_admissible(instance)
    expected = (instance.half_sum + 1) ** ((instance.p - 1) // 2)
    check("admissible count", len(profiles) == expected, f"{len(profiles)} profiles")

    solver_ok = True
    witness_count = 0
    round_trip_ok = True
    curve_ok = True
    lefschetz_ok = True
    differential_ok = True
    identity_ok = True
    odd_ok = True
    divisibility_ok = True
    for profile in profiles:
        solved = solve_b(profile)
        brute = brute_force_b(profile)
        if [w.b.values for w in solved] != [w.b.values for w in brute]:
            solver_ok = False
        if not odd_uniqueness(solved):
            odd_ok = False
        for witness in solved:
            witness_count += 1
            back = a_from_b(witness)
            # solve_b(back) == solved when back == profile (deterministic)
            if back != profile or witness.b.values not in {w.b.values for w in solved}:
                round_trip_ok = False
            curve = build_curve(witness)
            s = instance.fixed_point_count
            if (
                curve.genus != instance.g
                or curve.f_degree % instance.p != 0
                or curve.fixed_point_count != s
                or 2 * instance.g - 2 != -2 * instance.p + (instance.p - 1) * s
            ):
                curve_ok = False
            if not lefschetz_check(curve).holds:
                lefschetz_ok = False
            if differential_multiplicities(curve) != profile:
                differential_ok = False
            if not identity_suite(witness):
                identity_ok = False
            try:
                if not divisibility_propagates(witness.b):
                    divisibility_ok = False
            except InternalInvariantError:
                divisibility_ok = False
    check("solver equals brute force", solver_ok, f"{witness_count} witnesses")
    check("round trips", round_trip_ok)
    check("curve geometry counts", curve_ok)
    check("fixed-point identity", lefschetz_ok)
    check("differential count equals convolution route", differential_ok)
    check("identity routes agree", identity_ok)
    check("odd parts unique per profile", odd_ok)
    check("divisibility propagates", divisibility_ok)
    if instance.p == 3:
        catalog_pairs = {(r.a, r.b) for r in p3_catalog(instance.g)}
        solver_pairs = {
            (profile.a.values, w.b.values)
            for profile in profiles
            for w in solve_b(profile)
        }
        check(
            "p=3 closed-form catalog",
            catalog_pairs == solver_pairs
            and len(catalog_pairs) == expected_p3_realizable_count(instance.g),
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failures == 0 else EXIT_INVARIANT_VIOLATION


def odd_uniqueness(witnesses) -> bool:
    if len(witnesses) < 2:
        return True
    return len({odd_part(w.b) for w in witnesses}) == 1


def _cmd_catalog(args) -> int:
    if args.p != 3:
        raise InvalidInputError("the closed-form catalog exists only for p = 3")
    if args.g_max < 1:
        raise InvalidInputError(f"--g-max must be >= 1, got {args.g_max}")
    if args.cross_check and not cross_check_p3(args.g_max):
        sys.stderr.write("closed-form catalog disagrees with the solver\n")
        return EXIT_INVARIANT_VIOLATION
    rows = []
    for g in range(1, args.g_max + 1):
        rows.extend(p3_catalog(g))
    if args.format == "json":
        payload = [
            {"g": r.g, "k": r.k, "d": r.d, "b": list(r.b), "a": list(r.a)}
            for r in rows
        ]
        text = json.dumps(payload, ensure_ascii=False) + "\n"
    else:
        lines = [f"{'g':>4} {'k':>3} {'d':>3}   {'b':<12} {'a':<12}"]
        for r in rows:
            lines.append(
                f"{r.g:>4} {r.k:>3} {r.d:>3}   "
                f"{'(' + ','.join(map(str, r.b)) + ')':<12} "
                f"{'(' + ','.join(map(str, r.a)) + ')':<12}"
            )
        lines.append("")
        lines.append(P3_PPAV_NOTE)
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_kernel(args) -> int:
    matrix = conv_by_j_matrix(args.p)
    basis = kernel_basis(matrix)
    payload = {
        "p": args.p,
        "dimension": len(basis),
        "expected_dimension": (args.p - 3) // 2,
        "basis": [list(vec) for vec in basis],
    }
    _emit(json.dumps(payload, ensure_ascii=False) + "\n", args.out)
    if len(basis) != (args.p - 3) // 2:
        return EXIT_INVARIANT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primejac",
        description=(
            "Exact classification of order-p automorphism multiplicity "
            "profiles realizable by Jacobians, with superelliptic curve "
            "models and fixed-point verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="realizability report for (p, g)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--verify", action="store_true",
                    help="build a curve per realizable row and verify the fixed-point identity")
    sp.add_argument("--format", choices=("json", "csv", "table"), default="table")
    sp.add_argument("--out", help="write to a file instead of stdout")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("solve-b", help="witnesses for one multiplicity profile")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--a", required=True, help="comma-separated values a(1),...,a(p-1)")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_solve_b)

    sp = sub.add_parser("build-curve", help="superelliptic model for a branch profile")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--b", required=True, help="comma-separated values b(1),...,b(p-1)")
    sp.add_argument("--alphas", help="comma-separated distinct rationals (default 1..S)")
    sp.add_argument("--equation", action="store_true",
                    help="print the plain-text equation instead of JSON")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_build_curve)

    sp = sub.add_parser("verify", help="run the full identity suite for (p, g)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("catalog", help="closed-form p=3 catalog up to a genus bound")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g-max", type=int, required=True)
    sp.add_argument("--cross-check", action="store_true",
                    help="also replay the catalog against the solver")
    sp.add_argument("--format", choices=("json", "table"), default="table")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_catalog)

    sp = sub.add_parser("kernel", help="null space of the convolution-by-j operator")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_kernel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID_INPUT
    except InternalInvariantError as exc:
        sys.stderr.write(f"internal invariant violated: {exc}\n")
        return EXIT_INVARIANT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
