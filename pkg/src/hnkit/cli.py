"""Command-line experiment harness with machine-readable reports.

Subcommands: check, vanish, certify, ideal, map, family.  Every command
prints a human-readable summary by default and a schema-versioned JSON report
with ``--json``; reports for fixed inputs are byte-identical across runs
except for the elapsed-time field.  Exit codes: 0 success or certified,
2 inconclusive (vanishing not yet observed / certificate not definitive),
1 error.  The ``HNKIT_THREADS`` environment variable sets the worker count
used for independent experiment rows.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .analysis import (
    certify_vanishing,
    fixed_point_check,
    hessian_nilpotency_by_laplacian,
    hessian_nilpotency_by_matrix,
    jacobian_det,
    symmetric_map,
    vanish_experiment,
)
from .errors import InternalCheckError, ParseError
from .families import load_family_specs
from .graded import (
    CertificateStatus,
    ideal_graded_piece,
    orthogonal_complement,
    pde_solution_slice,
)
from .poly import Polynomial, slice_dimension
from .textform import (
    format_polynomial,
    parse_gaussian,
    parse_polynomial,
    scan_variable_count,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def _thread_count() -> int:
    raw = os.environ.get("HNKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _digest(inputs: dict) -> str:
    canonical = json.dumps(inputs, sort_keys=True)
    return "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _emit(args, command: str, inputs: dict, payload: dict, started: float) -> None:
    if not args.json:
        return
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool": "hnkit",
        "toolkit_version": __version__,
        "command": command,
        "inputs": inputs,
        "input_digest": _digest(inputs),
        "elapsed_seconds": round(time.monotonic() - started, 6),
        "payload": payload,
    }
    print(json.dumps(report, sort_keys=True))


def _say(args, *lines: str) -> None:
    if not args.json:
        for line in lines:
            print(line)


def _parse_joint(texts: list[str]) -> list:
    """Parse several polynomial texts over one shared variable set."""
    n = max(scan_variable_count(text) for text in texts)
    return [parse_polynomial(text, n) for text in texts]


# -- subcommands -----------------------------------------------------------


def cmd_check(args) -> int:
    started = time.monotonic()
    p = parse_polynomial(args.polynomial, args.nvars)
    by_matrix = hessian_nilpotency_by_matrix(p)
    by_laplacian = hessian_nilpotency_by_laplacian(p)
    if by_matrix != by_laplacian:
        raise InternalCheckError(
            f"HN routes disagree: matrix says {by_matrix}, iterates say {by_laplacian}"
        )
    degree = p.degree()
    payload = {
        "polynomial": format_polynomial(p),
        "n": p.n,
        "degree": degree,
        "homogeneous": p.is_homogeneous(),
        "hessian_route_nilpotent": by_matrix,
        "laplacian_route_nilpotent": by_laplacian,
        "hessian_nilpotent": by_matrix,
    }
    _say(
        args,
        f"polynomial: {payload['polynomial']}",
        f"variables: {p.n}   degree: {degree}   homogeneous: {_yn(payload['homogeneous'])}",
        f"hessian route (matrix power): {_yn(by_matrix)}",
        f"iterate route (laplacian^m of P^m, m <= {p.n}): {_yn(by_laplacian)}",
        f"hessian nilpotent: {_yn(by_matrix)}",
    )
    _emit(args, "check", {"polynomial": args.polynomial}, payload, started)
    return EXIT_OK


def cmd_vanish(args) -> int:
    started = time.monotonic()
    if args.mmax < 0:
        raise ValueError("--mmax must be non-negative")
    texts = [args.polynomial] + ([args.f] if args.f else [])
    parsed = _parse_joint(texts)
    p = parsed[0]
    f = parsed[1] if args.f else None
    report = vanish_experiment(
        p, f, m_max=args.mmax, incremental=args.incremental, threads=_thread_count()
    )
    payload = {
        "p": format_polynomial(p),
        "f": format_polynomial(report.f),
        "m_max": args.mmax,
        "rows": [
            {"m": row.m, "degree": row.degree, "is_zero": row.is_zero}
            for row in report.rows
        ],
        "first_all_zero_from": report.first_all_zero_from,
        "observed_vanishing": report.observed_vanishing(),
    }
    lines = [
        f"P: {payload['p']}",
        f"f: {payload['f']}" + ("  (defaulted to P)" if f is None else ""),
        "  m | degree | zero",
    ]
    for row in report.rows:
        degree_text = "-" if row.degree is None else str(row.degree)
        lines.append(f"{row.m:>3} | {degree_text:>6} | {_yn(row.is_zero)}")
    if report.first_all_zero_from is None:
        lines.append(f"no all-zero tail observed up to m = {args.mmax}")
    else:
        lines.append(f"all rows vanish from m = {report.first_all_zero_from} on")
    _say(args, *lines)
    _emit(
        args,
        "vanish",
        {"polynomial": args.polynomial, "f": args.f, "mmax": args.mmax},
        payload,
        started,
    )
    return EXIT_OK if report.observed_vanishing() else EXIT_INCONCLUSIVE


def cmd_certify(args) -> int:
    started = time.monotonic()
    p = parse_polynomial(args.polynomial, args.nvars)
    certificate = certify_vanishing(p, args.max_degree)
    base = certificate.base
    payload = {
        "p": format_polynomial(p),
        "n": p.n,
        "degree": p.homogeneous_degree(),
        "status": base.status.value,
        "saturation_degree": base.saturation_degree,
        "probe_degree_reached": base.probe_degree_reached,
        "hilbert": [
            {"m": m, "dim_ideal": di, "dim_slice": dv}
            for m, di, dv in base.hilbert_values
        ],
        "vanishing_bound": certificate.vanishing_bound,
    }
    lines = [
        f"P: {payload['p']}",
        f"status: {base.status.value}",
        f"probed degrees: 1..{base.probe_degree_reached}",
        "  m | dim ideal slice | dim slice",
    ]
    for m, di, dv in base.hilbert_values:
        lines.append(f"{m:>3} | {di:>15} | {dv:>9}")
    if base.status is CertificateStatus.NO_COMMON_ZERO:
        lines.append(f"saturation degree: {base.saturation_degree}")
        lines.append(
            f"certified: laplacian^m(P^(m+1)) = 0 for every m >= {certificate.vanishing_bound}"
        )
    else:
        lines.append("no saturation observed; nothing certified")
    _say(args, *lines)
    _emit(
        args,
        "certify",
        {"polynomial": args.polynomial, "max_degree": args.max_degree},
        payload,
        started,
    )
    return EXIT_OK if base.status is CertificateStatus.NO_COMMON_ZERO else EXIT_INCONCLUSIVE


def _read_generators(path: str) -> list:
    texts = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            stripped = line.split("#", 1)[0].strip()
            if stripped:
                texts.append(stripped)
    if not texts:
        raise ValueError(f"no generators found in {path}")
    return _parse_joint(texts)


def _parse_degree_range(text: str) -> tuple[int, int]:
    if ".." in text:
        low_text, high_text = text.split("..", 1)
        low, high = int(low_text), int(high_text)
    else:
        low = high = int(text)
    if low < 0 or high < low:
        raise ValueError(f"bad degree range {text!r}")
    return low, high


def cmd_ideal(args) -> int:
    started = time.monotonic()
    generators = _read_generators(args.generators)
    low, high = _parse_degree_range(args.m)
    rows = []
    for m in range(low, high + 1):
        ideal = ideal_graded_piece(generators, m)
        solutions = pde_solution_slice(generators, m)
        complement_match = orthogonal_complement(ideal) == solutions
        rows.append(
            {
                "m": m,
                "dim_ideal": ideal.dim,
                "dim_solutions": solutions.dim,
                "dim_slice": slice_dimension(generators[0].n, m),
                "complement_match": complement_match,
            }
        )
    payload = {
        "generators": [format_polynomial(g) for g in generators],
        "rows": rows,
    }
    lines = ["generators:"]
    lines += [f"  {text}" for text in payload["generators"]]
    lines.append("  m | dim ideal | dim solutions | dim slice | complement match")
    for row in rows:
        lines.append(
            f"{row['m']:>3} | {row['dim_ideal']:>9} | {row['dim_solutions']:>13} "
            f"| {row['dim_slice']:>9} | {_yn(row['complement_match'])}"
        )
    _say(args, *lines)
    _emit(
        args,
        "ideal",
        {"generators_file": args.generators, "m": args.m},
        payload,
        started,
    )
    return EXIT_OK


def cmd_map(args) -> int:
    started = time.monotonic()
    p = parse_polynomial(args.polynomial, args.nvars)
    mapping = symmetric_map(p)
    determinant = jacobian_det(mapping)
    payload = {
        "p": format_polynomial(p),
        "components": [format_polynomial(c) for c in mapping.components],
        "jacobian_det": format_polynomial(determinant),
        "jacobian_is_one": determinant == Polynomial.constant(p.n, 1),
    }
    lines = [f"P: {payload['p']}"]
    lines += [
        f"F{i} = {text}" for i, text in enumerate(payload["components"], start=1)
    ]
    lines.append(f"jacobian determinant: {payload['jacobian_det']}")
    if args.fixed_point:
        witness = [parse_gaussian(chunk) for chunk in args.fixed_point.split(",")]
        result = fixed_point_check(mapping, witness)
        payload["fixed_point"] = {
            "w": [str(v) for v in witness],
            "is_fixed": result.is_fixed,
            "on_isotropy_quadric": result.on_isotropy_quadric,
        }
        lines.append(
            f"fixed point ({args.fixed_point}): fixed={_yn(result.is_fixed)}, "
            f"on isotropy quadric: {_yn(result.on_isotropy_quadric)}"
        )
    _say(args, *lines)
    _emit(
        args,
        "map",
        {"polynomial": args.polynomial, "fixed_point": args.fixed_point},
        payload,
        started,
    )
    return EXIT_OK


def cmd_family(args) -> int:
    started = time.monotonic()
    specs = load_family_specs(args.specfile)
    members = []
    lines = []
    for index, spec in enumerate(specs):
        p = spec.build()
        members.append(
            {
                "kind": spec.kind.value,
                "n": spec.n,
                "d": spec.d,
                "polynomial": format_polynomial(p),
                "hn_family": spec.is_hn_family(),
            }
        )
        lines.append(f"# {index}: {spec.kind.value} n={spec.n} d={spec.d}")
        lines.append(format_polynomial(p))
    payload = {"members": members}
    _say(args, *lines)
    _emit(args, "family", {"specfile": args.specfile}, payload, started)
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# -- argument plumbing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hnkit",
        description="Exact experiments on Hessian-nilpotent polynomials.",
        epilog=(
            "Exit codes: 0 success/certified, 2 inconclusive, 1 error. "
            "HNKIT_THREADS sets the worker count for independent experiment rows."
        ),
    )
    parser.add_argument("--version", action="version", version=f"hnkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    check = sub.add_parser("check", help="decide Hessian nilpotency (both routes)")
    check.add_argument("polynomial", help="polynomial text, e.g. '(z1+i*z2)^4'")
    check.add_argument("--nvars", type=int, default=None, help="explicit variable count")
    add_common(check)
    check.set_defaults(func=cmd_check)

    vanish = sub.add_parser("vanish", help="compute laplacian^m(f*P^m) for m = 0..mmax")
    vanish.add_argument("polynomial", help="the polynomial P")
    vanish.add_argument("--f", default=None, help="multiplier polynomial (defaults to P)")
    vanish.add_argument("--mmax", type=int, default=6, help="largest m (default 6)")
    vanish.add_argument(
        "--incremental",
        action="store_true",
        help="reuse P^m = P^(m-1)*P instead of fresh powers",
    )
    add_common(vanish)
    vanish.set_defaults(func=cmd_vanish)

    certify = sub.add_parser(
        "certify", help="saturation certificate for the gradient system of P"
    )
    certify.add_argument("polynomial", help="homogeneous Hessian-nilpotent P")
    certify.add_argument("--nvars", type=int, default=None, help="explicit variable count")
    certify.add_argument(
        "--max-degree", type=int, default=None, help="override the probe bound"
    )
    add_common(certify)
    certify.set_defaults(func=cmd_certify)

    ideal = sub.add_parser(
        "ideal", help="graded dimensions and the complement cross-check"
    )
    ideal.add_argument("generators", help="file with one polynomial per line (# comments)")
    ideal.add_argument("--m", required=True, help="degree or range, e.g. 3 or 2..5")
    add_common(ideal)
    ideal.set_defaults(func=cmd_ideal)

    mapping = sub.add_parser("map", help="the map z - grad P and its Jacobian")
    mapping.add_argument("polynomial", help="the potential P")
    mapping.add_argument("--nvars", type=int, default=None, help="explicit variable count")
    mapping.add_argument(
        "--fixed-point",
        default=None,
        help="comma-separated witness, e.g. '1,i' (must be nonzero)",
    )
    add_common(mapping)
    mapping.set_defaults(func=cmd_map)

    family = sub.add_parser("family", help="emit corpus members from a spec file")
    family.add_argument("specfile", help="JSON list of family specs")
    add_common(family)
    family.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR
    except InternalCheckError as error:
        print(f"internal error: {error}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, json.JSONDecodeError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
