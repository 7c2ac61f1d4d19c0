"""Command-line front end.

Subcommands: roots, spectrum, bound, supports, haar-lp, validate, report.
Exact quantities are serialized as "p/q" strings, never floats; floats appear
only in `validate` payloads.  Exit codes: 0 success, 2 invalid input,
3 capacity exceeded, 4 validation failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .cotlar_stein import run_validation_suite
from .entropy import (
    DispersiveQuery,
    conjectured_entropy_bound,
    dispersive_exponent,
    entropy_lower_bound,
    fast_slow_split,
    haar_entropy,
    lyapunov_spectrum,
)
from .rigidity import (
    BOUND_HAAR_FRACTION,
    BOUND_THM14,
    extremal_vertex_report,
    inner_weight_formula,
    min_haar_weight,
    solve_min_haar,
)
from .roots import (
    CartanElement,
    build_type_a,
    dominant_representative,
    is_regular,
    weyl_orbit,
)
from .supports import (
    CapacityError,
    enumerate_block_partitions,
    enumerate_symmetric_closed,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAPACITY = 3
EXIT_VALIDATION = 4

SEED_ENV_VAR = "HAARGAP_SEED"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as a rational 'p/q'") from exc


def parse_direction(text: str) -> CartanElement:
    parts = [p.strip() for p in text.split(",")]
    coords = tuple(parse_rational(p) for p in parts)
    # CartanElement rejects off-trace input, reporting the computed trace
    return CartanElement(coords)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _direction_arg(text: str) -> CartanElement:
    try:
        return parse_direction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _emit(args, command: str, inputs: dict, results: dict, table: str) -> None:
    if args.format == "json":
        payload = {
            "command": command,
            "inputs": inputs,
            "results": results,
            "version": __version__,
        }
        text = json.dumps(payload, indent=2, ensure_ascii=False)
    else:
        text = table
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_roots(args) -> int:
    rs = build_type_a(args.n)
    direction = args.direction
    results = {
        "n": rs.n,
        "rank": rs.rank,
        "num_roots": len(rs.roots),
        "num_positive": len(rs.positive_indices),
        "positive_roots": [f"α_{r.i}{r.j}" for r in rs.positive_roots()],
    }
    inputs = {"n": args.n}
    if direction is not None:
        if direction.n != rs.n:
            raise ValueError(f"direction has {direction.n} coordinates, expected {rs.n}")
        orbit = weyl_orbit(direction)
        results["direction"] = [_frac(c) for c in direction.coords]
        results["weyl_orbit_size"] = len(orbit)
        results["dominant_representative"] = [
            _frac(c) for c in dominant_representative(direction).coords
        ]
        results["is_regular"] = is_regular(direction)
        inputs["direction"] = ",".join(_frac(c) for c in direction.coords)
    lines = [
        f"A_{rs.n - 1} root system for SL_{rs.n}",
        f"  roots: {results['num_roots']}  positive: {results['num_positive']}  rank: {rs.rank}",
        "  positive roots: " + " ".join(results["positive_roots"]),
    ]
    if direction is not None:
        lines.append(
            f"  direction {inputs['direction']}: orbit size {results['weyl_orbit_size']}, "
            f"dominant {','.join(results['dominant_representative'])}, "
            f"regular: {results['is_regular']}"
        )
    _emit(args, "roots", inputs, results, "\n".join(lines))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    rs = build_type_a(args.n)
    spec = lyapunov_spectrum(rs, args.direction)
    inputs = {"n": args.n, "direction": ",".join(_frac(c) for c in args.direction.coords)}
    results = {
        "values": [_frac(v) for v in spec.values],
        "chi_max": _frac(spec.chi_max),
        "J": spec.J,
        "dominant_direction": [_frac(c) for c in spec.direction.coords],
    }
    lines = [
        f"Lyapunov spectrum for SL_{args.n}, direction {inputs['direction']}",
        "  values: " + " ".join(results["values"]),
        f"  chi_max: {results['chi_max']}",
    ]
    if args.K is not None:
        split = fast_slow_split(rs, args.direction, args.K)
        inputs["K"] = _frac(args.K)
        results["threshold"] = _frac(split.threshold)
        results["J0"] = split.J0
        results["slow_indices"] = list(split.slow_indices)
        results["fast_indices"] = list(split.fast_indices)
        lines.append(
            f"  split at 1/(2K) = {results['threshold']}: "
            f"J0 = {split.J0} slow, {len(split.fast_indices)} fast"
        )
    _emit(args, "spectrum", inputs, results, "\n".join(lines))
    return EXIT_OK


def _cmd_bound(args) -> int:
    rs = build_type_a(args.n)
    spec = lyapunov_spectrum(rs, args.direction)
    inputs = {"n": args.n, "direction": ",".join(_frac(c) for c in args.direction.coords)}
    results = {
        "thm14": _frac(entropy_lower_bound(rs, args.direction)),
        "haar": _frac(haar_entropy(rs, args.direction)),
        "optim": _frac(conjectured_entropy_bound(rs, args.direction)),
        "chi_max": _frac(spec.chi_max),
    }
    lines = [
        f"Entropy bounds for SL_{args.n}, direction {inputs['direction']}",
        f"  proved lower bound:      {results['thm14']}",
        f"  Haar entropy:            {results['haar']}",
        f"  conjectured lower bound: {results['optim']}",
    ]
    if args.K is not None:
        inputs["K"] = _frac(args.K)
        exponent = dispersive_exponent(DispersiveQuery(args.K, args.direction), rs)
        results["dispersive_exponent"] = _frac(exponent)
        lines.append(f"  dispersive exponent at K={inputs['K']}: {results['dispersive_exponent']}")
    _emit(args, "bound", inputs, results, "\n".join(lines))
    return EXIT_OK


def _cmd_supports(args) -> int:
    if args.lattice == "generic":
        sets = enumerate_symmetric_closed(build_type_a(args.n))
    else:
        sets = enumerate_block_partitions(args.n)
    by_kind: dict[str, int] = {}
    for s in sets:
        by_kind[s.kind] = by_kind.get(s.kind, 0) + 1
    inputs = {"n": args.n, "lattice": args.lattice}
    results = {
        "count": len(sets),
        "counts_by_kind": by_kind,
        "supports": [{"label": s.label, "kind": s.kind} for s in sets],
    }
    lines = [
        f"Admissible supports for SL_{args.n} ({args.lattice}): {len(sets)}",
        "  by kind: " + ", ".join(f"{k}: {v}" for k, v in sorted(by_kind.items())),
    ]
    if len(sets) <= 40:
        lines += [f"    {s.label}  [{s.kind}]" for s in sets]
    _emit(args, "supports", inputs, results, "\n".join(lines))
    return EXIT_OK


def _cmd_haar_lp(args) -> int:
    directions = args.direction if args.direction else None
    mode = BOUND_THM14 if args.bound_mode == "thm14" else BOUND_HAAR_FRACTION
    _, model, solution = solve_min_haar(
        args.n, args.lattice, args.beta, bound_mode=mode, test_directions=directions
    )
    inputs = {
        "n": args.n,
        "lattice": args.lattice,
        "beta": _frac(args.beta),
        "bound_mode": args.bound_mode,
    }
    if directions:
        inputs["direction"] = [",".join(_frac(c) for c in d.coords) for d in directions]
    constraints = []
    for X, row, rhs in zip(model.directions, model.ge_rows, model.ge_rhs):
        entry = {
            "direction": ",".join(_frac(c) for c in X.coords),
            "rhs": _frac(rhs),
        }
        if len(model.variables) <= 64:
            entry["coefficients"] = [_frac(v) for v in row]
        constraints.append(entry)
    results = {
        "status": solution.status,
        "num_variables": len(model.variables),
        "num_constraints": len(model.ge_rows),
        "constraints": constraints,
    }
    lines = [
        f"Entropy-game LP for SL_{args.n} ({args.lattice}), beta = {inputs['beta']}, "
        f"{len(model.variables)} variables, {len(model.ge_rows)} constraints",
    ]
    if solution.status == "optimal":
        report = extremal_vertex_report(solution)
        results["min_haar_weight"] = _frac(solution.optimum)
        results["vertex"] = [
            {"label": label, "kind": kind, "weight": _frac(w)}
            for label, kind, w in report.entries
        ]
        results["vertex_note"] = report.note
        lines.append(f"  min Haar weight: {results['min_haar_weight']}")
        lines.append("  optimal vertex (" + report.note + "):")
        lines += [f"    {label:>24}  [{kind}]  {_frac(w)}" for label, kind, w in report.entries]
    else:
        lines.append(f"  status: {solution.status}")
    _emit(args, "haar-lp", inputs, results, "\n".join(lines))
    return EXIT_OK


def _cmd_validate(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV_VAR, "0"))
    summary = run_validation_suite(seed)
    inputs = {"seed": seed}
    results = summary
    lines = [f"Numerical validation suite (seed {seed})"]
    for check in summary["checks"]:
        mark = "PASS" if check["passed"] else "FAIL"
        extra = f"  slope={check['slope']:.3f}" if "slope" in check else ""
        lines.append(f"  [{mark}] {check['name']}{extra}")
    lines.append("all passed" if summary["all_passed"] else "FAILURES present")
    _emit(args, "validate", inputs, results, "\n".join(lines))
    return EXIT_OK if summary["all_passed"] else EXIT_VALIDATION


def _cmd_report(args) -> int:
    rows = []
    half = Fraction(1, 2)
    generic_expected = {3: Fraction(1, 4), 4: Fraction(0)}
    for n in (3, 4):
        computed = min_haar_weight(n, "generic", half)
        expected = generic_expected[n]
        rows.append(("generic", n, computed, expected))
    for n in range(3, 13):
        computed = min_haar_weight(n, "inner", half)
        rows.append(("inner", n, computed, inner_weight_formula(n)))
    all_equal = all(c == e for _, _, c, e in rows)
    inputs = {"beta": _frac(half)}
    results = {
        "rows": [
            {
                "lattice": mode,
                "n": n,
                "computed": _frac(c),
                "expected": _frac(e),
                "equal": c == e,
            }
            for mode, n, c, e in rows
        ],
        "all_equal": all_equal,
    }
    lines = [
        "| lattice | n | min Haar weight | closed form | equal |",
        "|---------|---|-----------------|-------------|-------|",
    ]
    for mode, n, c, e in rows:
        lines.append(f"| {mode} | {n} | {_frac(c)} | {_frac(e)} | {'yes' if c == e else 'NO'} |")
    _emit(args, "report", inputs, results, "\n".join(lines))
    return EXIT_OK if all_equal else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haargap",
        description="Exact entropy bounds, support enumeration and Haar-weight "
        "linear programs for diagonal flows on SL_n.",
    )
    parser.add_argument("--version", action="version", version=f"haargap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--output", help="write the rendered output to this path")

    p = sub.add_parser("roots", help="root data and Weyl orbit of a direction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--direction", type=_direction_arg, default=None)
    common(p)
    p.set_defaults(handler=_cmd_roots)

    p = sub.add_parser("spectrum", help="Lyapunov spectrum and fast/slow split")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--direction", type=_direction_arg, required=True)
    p.add_argument("--K", type=_rational_arg, default=None)
    common(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("bound", help="entropy bounds and dispersive exponent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--direction", type=_direction_arg, required=True)
    p.add_argument("--K", type=_rational_arg, default=None)
    common(p)
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("supports", help="enumerate admissible supports")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lattice", choices=("generic", "inner"), default="generic")
    common(p)
    p.set_defaults(handler=_cmd_supports)

    p = sub.add_parser("haar-lp", help="solve the Haar-weight linear program")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lattice", choices=("generic", "inner"), default="generic")
    p.add_argument("--beta", type=_rational_arg, required=True)
    p.add_argument("--bound-mode", choices=("haar-fraction", "thm14"), default="haar-fraction")
    p.add_argument("--direction", type=_direction_arg, action="append", default=None,
                   help="override the Weyl-orbit test directions (repeatable; "
                        "use --direction=-1,2,-1 for leading minus signs)")
    common(p)
    p.set_defaults(handler=_cmd_haar_lp)

    p = sub.add_parser("validate", help="run the numerical validation suite")
    p.add_argument("--seed", type=int, default=None,
                   help=f"override the corpus seed (default: ${SEED_ENV_VAR} or 0)")
    common(p)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("report", help="theorem table: computed vs closed-form Haar weights")
    common(p)
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


def console_entry() -> None:
    sys.exit(main())
