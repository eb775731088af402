"""Command-line entry point: ``a5lattice <subcommand> ...``.

Exit status: 0 when every requested check holds, 1 when some check fails,
2 when an object could not be constructed or the input was malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import __version__
from .cases import CaseId, build_case, enumerate_cases, gram
from .codes import build_binary_golay, build_ternary_golay, verify_steiner
from .discform import check_case_claims, disc_group, form_table
from .exactmath import ExactMatrix, determinant, format_rational, inverse
from .k3reps import (
    allowed_orbit_sizes,
    exclude_root_system,
    solve_picard_decomposition,
    solve_zeta3_twist,
)
from .niemeier import RootSystemLabel, build_niemeier, contains, inner_product, vector
from .reference import DISCRIMINANT_CLAIMS
from .verify import StageError, verify_all

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _rows(m: ExactMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.rows()]


def _cmd_verify_all(args, out: TextIO) -> int:
    try:
        report = verify_all(args.seed_fixtures)
    except StageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_codes(args, out: TextIO) -> int:
    if args.which == "binary":
        code, t, k = build_binary_golay(), 5, 8
    else:
        code, t, k = build_ternary_golay(), 5, 6
    weights = dict(sorted(code.weight_distribution().items()))
    steiner = verify_steiner(code, t, k)
    if args.json:
        _dump({"kind": code.kind, "weights": {str(w): c for w, c in weights.items()}, "steiner": steiner}, out)
    elif args.check == "weights":
        for w, c in weights.items():
            out.write(f"{w} {c}\n")
    else:
        out.write(f"S({t},{k},{code.length}): {'true' if steiner else 'false'}\n")
    return EXIT_OK if args.check == "weights" or steiner else EXIT_FAIL


def _parse_vector(line: str):
    return vector(Fraction(tok) for tok in line.split())


def _cmd_lattice(args, out: TextIO, stdin: TextIO) -> int:
    n = build_niemeier(args.root_system)
    if args.check == "unimodular":
        det = determinant(n.basis_gram)
        out.write(f"det {format_rational(det)}\n")
        return EXIT_OK if abs(det) == 1 else EXIT_FAIL
    status = EXIT_OK
    for lineno, line in enumerate(stdin, 1):
        if not line.strip():
            continue
        try:
            v = _parse_vector(line)
        except (ValueError, ZeroDivisionError) as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if contains(n, v):
            out.write(f"member norm {format_rational(inner_product(n, v, v))}\n")
        else:
            out.write("not a member\n")
            status = EXIT_FAIL
    return status


def _cmd_gram(args, out: TextIO) -> int:
    g = gram(build_case(args.case))
    if args.json:
        _dump(
            {"case": args.case, "gram": _rows(g), "inverse": _rows(inverse(g)), "determinant": format_rational(determinant(g))},
            out,
        )
    else:
        out.write(f"{inverse(g) if args.inverse else g}\n")
    return EXIT_OK


def _cmd_disc(args, out: TextIO) -> int:
    g = gram(build_case(args.case))
    group = disc_group(g)
    claim = DISCRIMINANT_CLAIMS[args.case]
    checks = check_case_claims(args.case, g)
    ok = all(c.passed for c in checks)
    if args.json:
        _dump(
            {
                "invariant_factors": list(group.invariant_factors),
                "generators": [list(x) for x in claim.generators],
                "pairing_table": [[format_rational(x) for x in row] for row in form_table(group, claim.generators)],
                "checks": [
                    {"name": c.name, "expected": c.expected, "actual": c.actual, "pass": c.passed} for c in checks
                ],
            },
            out,
        )
    else:
        out.write("invariant factors " + " ".join(map(str, group.invariant_factors)) + "\n")
        for c in checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}\n")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_solve(args, out: TextIO) -> int:
    if args.system == "picard":
        sols = [s.as_tuple() for s in solve_picard_decomposition()]
        if args.json:
            _dump({"solutions": [list(s) for s in sols]}, out)
        else:
            for s in sols:
                out.write("a2={} a3={} a4={} a5={}\n".format(*s))
        return EXIT_OK
    branches = solve_zeta3_twist()
    if args.json:
        _dump(
            [
                {
                    "exponents": list(b.exponents),
                    "chi_top": b.chi_top,
                    "chi_2A": b.chi_2a,
                    "chi_3A": b.chi_3a,
                    "chi_5A": b.chi_5a,
                    "profile": list(b.profile) if b.profile else None,
                    "status": b.status,
                }
                for b in branches
            ],
            out,
        )
    else:
        for b in branches:
            out.write(f"{b.exponents} chi={b.chi_top} profile={b.profile} {b.status}\n")
    return EXIT_OK


def _cmd_orbits(args, out: TextIO) -> int:
    label = RootSystemLabel.parse(args.root_system)
    verdict = exclude_root_system(label)
    body = {
        "root_system": label.value,
        "allowed_orbit_sizes": sorted(allowed_orbit_sizes()),
        "excluded": verdict.excluded,
        "reason": verdict.reason,
    }
    if label in (RootSystemLabel.A1_24, RootSystemLabel.A2_12):
        body["cases"] = {c.value: list(c.orbit_sizes) for c in enumerate_cases(label)}
    if args.json:
        _dump(body, out)
    else:
        out.write(f"{label}: {'excluded' if verdict.excluded else 'admissible'} ({verdict.reason})\n")
        for case, sizes in body.get("cases", {}).items():
            out.write(f"  {case}: {' + '.join(map(str, sizes))}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="a5lattice", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    va = sub.add_parser("verify-all", help="run every check and report")
    va.add_argument("--format", choices=("text", "json"), default="text")
    va.add_argument("--seed-fixtures", metavar="DIR", help="directory of gram_<case>.txt / inverse_<case>.txt overrides")

    c = sub.add_parser("codes", help="Golay code weights and Steiner property")
    c.add_argument("--which", choices=("binary", "ternary"), required=True)
    c.add_argument("--check", choices=("weights", "steiner"), default="weights")
    c.add_argument("--json", action="store_true")

    lat = sub.add_parser("lattice", help="Niemeier lattice unimodularity or membership (vectors on stdin)")
    lat.add_argument("--root-system", choices=("24A1", "12A2"), required=True)
    lat.add_argument("--check", choices=("unimodular", "membership"), required=True)

    cases = [c.value for c in CaseId]
    g = sub.add_parser("gram", help="Gram matrix of an invariant-lattice case")
    g.add_argument("--case", choices=cases, required=True)
    g.add_argument("--inverse", action="store_true")
    g.add_argument("--json", action="store_true")

    d = sub.add_parser("disc", help="discriminant group and form of a case")
    d.add_argument("--case", choices=cases, required=True)
    d.add_argument("--json", action="store_true")

    s = sub.add_parser("solve", help="character-theoretic equation systems")
    s.add_argument("system", choices=("picard", "twist"))
    s.add_argument("--json", action="store_true")

    o = sub.add_parser("orbits", help="orbit decompositions or exclusion of a root system")
    o.add_argument("--root-system", choices=("24A1", "12A2", "6A4", "6D4"), required=True)
    o.add_argument("--json", action="store_true")
    return p


def main(argv: Sequence[str] | None = None, *, stdout: TextIO | None = None, stdin: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = stdout or sys.stdout
    handlers = {
        "verify-all": lambda: _cmd_verify_all(args, out),
        "codes": lambda: _cmd_codes(args, out),
        "lattice": lambda: _cmd_lattice(args, out, stdin or sys.stdin),
        "gram": lambda: _cmd_gram(args, out),
        "disc": lambda: _cmd_disc(args, out),
        "solve": lambda: _cmd_solve(args, out),
        "orbits": lambda: _cmd_orbits(args, out),
    }
    try:
        return handlers[args.command]()
    except Exception as exc:  # construction failures, not check failures
        print(f"error: {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
