"""Command-line interface.

Commands: present, generators, fixed-points, hilbert, verify, enumerate.
Formats: text (default), json (schemaVersion 1), latex where it makes
sense (present, generators).  All degrees in user-facing output use the
cohomological convention, i.e. twice the internal weight.

Exit codes: 0 success, 1 verification failure, 2 resource cap hit,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import prod

from .errors import InvalidHessenbergError, ResourceLimitError
from .generators import generator_matrix, ideal_generators
from .groebner import DEFAULT_PAIR_BUDGET, buchberger, hilbert_series
from .hessenberg import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_PERMUTATION_CAP,
    enumerate_all,
    fixed_points,
    parse_hessenberg,
)
from .latexout import ideal_latex_lines, latex_document, matrix_latex_lines
from .polyring import poly_to_dict
from .verify import CHECK_NAMES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_RESOURCE = 2
EXIT_USAGE = 64

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here says 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(text: str, out_path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _ring_text(n: int, mode: str) -> str:
    names = [f"x{k}" for k in range(1, n + 1)]
    if mode == "equivariant":
        names.append("t")
    return "Q[" + ", ".join(names) + "]"


def _generator_lines(rows, polys, mode: str) -> list[str]:
    lines = []
    for (i, j), g in zip(rows, polys):
        degree = 2 * (i - j + 1)
        lines.append(f"f[{i},{j}] (deg {degree}) = {g}")
    return lines


def _cmd_present(args) -> int:
    h = parse_hessenberg(args.h)
    ideal = ideal_generators(h, args.mode)
    rows = ideal.rows()
    if args.format == "text":
        lines = [
            f"h: {h}",
            f"mode: {ideal.mode}",
            f"ring: {_ring_text(h.n, ideal.mode)}",
        ]
        lines += _generator_lines(rows, ideal.generators, ideal.mode)
        _emit("\n".join(lines), args.out)
    elif args.format == "json":
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "present",
            "h": list(h.values),
            "mode": ideal.mode,
            "n": h.n,
            "generators": [
                {
                    "row": i,
                    "col": j,
                    "degree": 2 * (i - j + 1),
                    "polynomial": poly_to_dict(g),
                }
                for (i, j), g in zip(rows, ideal.generators)
            ],
        }
        _emit(_json_text(payload), args.out)
    else:
        title = f"Presentation for h = {h}, {ideal.mode} mode"
        _emit(latex_document(title, ideal_latex_lines(ideal)), args.out)
    return EXIT_OK


def _cmd_generators(args) -> int:
    matrix = generator_matrix(args.n, args.mode)
    if args.format == "text":
        lines = [f"n: {matrix.n}", f"mode: {matrix.mode}",
                 f"ring: {_ring_text(matrix.n, matrix.mode)}"]
        rows = [(i, j) for i, j, _ in matrix.entries]
        polys = [g for _, _, g in matrix.entries]
        lines += _generator_lines(rows, polys, matrix.mode)
        _emit("\n".join(lines), args.out)
    elif args.format == "json":
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "generators",
            "n": matrix.n,
            "mode": matrix.mode,
            "entries": [
                {
                    "row": i,
                    "col": j,
                    "degree": 2 * (i - j + 1),
                    "polynomial": poly_to_dict(g),
                }
                for i, j, g in matrix.entries
            ],
        }
        _emit(_json_text(payload), args.out)
    else:
        title = f"Generators $f_{{i,j}}$ for $n = {matrix.n}$, {matrix.mode} mode"
        _emit(latex_document(title, matrix_latex_lines(matrix)), args.out)
    return EXIT_OK


def _format_permutation(w) -> str:
    if len(w) <= 9:
        return "".join(map(str, w))
    return " ".join(map(str, w))


def _cmd_fixed_points(args) -> int:
    h = parse_hessenberg(args.h)
    points = fixed_points(h, cap=args.cap)
    if args.format == "text":
        lines = [_format_permutation(w) for w in points]
        lines.append(f"count: {len(points)}")
        _emit("\n".join(lines), args.out)
    else:
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "fixed-points",
            "h": list(h.values),
            "count": len(points),
            "fixedPoints": [list(w) for w in points],
        }
        _emit(_json_text(payload), args.out)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    functions = enumerate_all(args.n, cap=args.cap)
    if args.format == "text":
        lines = [",".join(map(str, h.values)) for h in functions]
        lines.append(f"count: {len(functions)}")
        _emit("\n".join(lines), args.out)
    else:
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "enumerate",
            "n": args.n,
            "count": len(functions),
            "functions": [list(h.values) for h in functions],
        }
        _emit(_json_text(payload), args.out)
    return EXIT_OK


def _poincare_text(series, denominator_power: int) -> str:
    if not series:
        return "0"
    parts = []
    for d, c in enumerate(series):
        if not c:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            q = f"q^{2 * d}"
            parts.append(q if c == 1 else f"{c}*{q}")
    numerator = " + ".join(parts) if parts else "0"
    if denominator_power == 0:
        return numerator
    denom = "(1 - q^2)" if denominator_power == 1 else f"(1 - q^2)^{denominator_power}"
    if len(parts) > 1:
        numerator = f"({numerator})"
    return f"{numerator}/{denom}"


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get("HESSCOH_CACHE_DIR") or None


def _cmd_hilbert(args) -> int:
    h = parse_hessenberg(args.h)
    ideal = ideal_generators(h, args.mode)
    gb = buchberger(ideal.generators, pair_budget=args.pair_budget, cache_dir=_cache_dir(args))
    data = hilbert_series(gb)
    dimension = "infinite" if data.quotient_dimension is None else data.quotient_dimension
    count = len(fixed_points(h))
    text = _poincare_text(data.series, data.denominator_power)
    if args.format == "text":
        lines = [
            f"h: {h}",
            f"mode: {ideal.mode}",
            f"poincare: {text}",
            f"dimension: {dimension}",
            f"fixed points: {count}",
        ]
        _emit("\n".join(lines), args.out)
    else:
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "command": "hilbert",
            "h": list(h.values),
            "mode": ideal.mode,
            "poincare": {
                "coefficients": [
                    {"degree": 2 * d, "dimension": c} for d, c in enumerate(data.series) if c
                ],
                "denominatorPower": data.denominator_power,
                "text": text,
            },
            "dimension": dimension,
            "predictedDimension": prod(h(j) - j + 1 for j in range(1, h.n + 1)),
            "fixedPointCount": count,
        }
        _emit(_json_text(payload), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = "all"
    else:
        names = [part.strip() for part in args.suite.split(",") if part.strip()]
        unknown = [name for name in names if name not in CHECK_NAMES]
        if unknown:
            sys.stderr.write(
                f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECK_NAMES)}\n"
            )
            return EXIT_USAGE
        if not names:
            sys.stderr.write("empty --suite\n")
            return EXIT_USAGE
    report = run_suite(
        names,
        n_max=args.n_max,
        groebner_n_max=args.groebner_n_max,
        jobs=args.jobs,
        cache_dir=_cache_dir(args),
        pair_budget=args.pair_budget,
    )
    include_timing = not args.no_timing
    if args.format == "text":
        _emit(report.render_text(include_timing), args.out)
    else:
        _emit(_json_text(report.to_dict(include_timing)), args.out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hesscoh",
        description=(
            "Presentations of the S^1-equivariant and ordinary cohomology rings "
            "of regular nilpotent Hessenberg varieties in type A, with built-in "
            "verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("text", "json"), mode=False):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", help="write output to a file")
        if mode:
            p.add_argument("--mode", choices=("equivariant", "ordinary"),
                           default="equivariant")

    p = sub.add_parser("present", help="generators of the presentation for one h")
    p.add_argument("--h", required=True, type=_csv_ints, metavar="H1,H2,...")
    common(p, formats=("text", "json", "latex"), mode=True)
    p.set_defaults(func=_cmd_present)

    p = sub.add_parser("generators", help="the full triangular f_{i,j} table")
    p.add_argument("--n", required=True, type=int)
    common(p, formats=("text", "json", "latex"), mode=True)
    p.set_defaults(func=_cmd_generators)

    p = sub.add_parser("fixed-points", help="S^1-fixed permutation flags in Hess(h)")
    p.add_argument("--h", required=True, type=_csv_ints, metavar="H1,H2,...")
    p.add_argument("--cap", type=int, default=DEFAULT_PERMUTATION_CAP,
                   help="largest n for which all n! permutations are scanned")
    common(p)
    p.set_defaults(func=_cmd_fixed_points)

    p = sub.add_parser("enumerate", help="all Hessenberg functions for one n")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("hilbert", help="Poincare series and dimension of the quotient")
    p.add_argument("--h", required=True, type=_csv_ints, metavar="H1,H2,...")
    p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    p.add_argument("--cache-dir", help="Groebner cache (or env HESSCOH_CACHE_DIR)")
    common(p, mode=True)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--suite", default="all",
                   help="comma-separated check names, or 'all' (default). "
                        f"Known: {', '.join(CHECK_NAMES)}")
    p.add_argument("--n-max", type=int, default=None,
                   help="cap for the symbolic sweeps (default: per-check)")
    p.add_argument("--groebner-n-max", type=int, default=None,
                   help="cap for the Groebner-backed sweeps (default 4)")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers across independent (check, h) tasks")
    p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    p.add_argument("--cache-dir", help="Groebner cache (or env HESSCOH_CACHE_DIR)")
    p.add_argument("--no-timing", action="store_true",
                   help="omit elapsed times for byte-identical reruns")
    common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidHessenbergError as exc:
        sys.stderr.write(f"invalid Hessenberg function ({exc.code}): {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
