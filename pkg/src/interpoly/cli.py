"""Command-line surface: fitting, counting formulas, Brill-Noether queries,
the error-correction protocol, and the randomized verification harness.

Exit status 0 covers every successfully computed answer, including
"error detected" and "no such component" -- those are results, not
failures.  Malformed input exits 1; bad flags exit 2 (argparse).
All randomized commands take --seed and default to the documented
fixed seed, so every invocation is reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .brillnoether import (
    CurveClass,
    NOT_APPLICABLE,
    bn_table,
    bn_table_csv,
    hypersurface_count,
    interpolation_verdict,
)
from .errors import AmbiguousDecodeError, DetectedError
from .fields import DEFAULT_SEED, PrimeField, SeededRng
from .fitting import BasisSpec, PointSet, fit_curves
from .harness import DEFAULT_PRIME, SuiteConfig, run_suite
from .reedsolomon import Codeword, Message, rs_corrupt, rs_decode, rs_detect, rs_encode


def _emit(text: str, out: str | None):
    print(text)
    if out:
        Path(out).write_text(text + "\n")


def cmd_fit(args) -> int:
    points = PointSet.from_csv_text(Path(args.points_file).read_text())
    basis = BasisSpec.from_name(args.basis, degree=args.degree)
    result = fit_curves(points, basis)
    if args.json:
        payload = {
            "basis": basis.name,
            "points": len(points),
            "design_rank": result.design_rank,
            "kernel_dim": result.kernel_dim,
            "curves": [c.to_json_obj() for c in result.curves],
        }
        _emit(json.dumps(payload, indent=2), args.out)
        return 0
    lines = [
        f"basis: {basis.name} ({len(basis.polys)} polynomials)",
        f"points: {len(points)}",
        f"design matrix rank: {result.design_rank}",
        f"kernel dimension: {result.kernel_dim}",
    ]
    for i, curve in enumerate(result.curves):
        lines.append(f"curve {i}: {curve} = 0")
    _emit("\n".join(lines), args.out)
    return 0


def cmd_count(args) -> int:
    if args.kind == "plane":
        value = hypersurface_count(2, args.degree)
    elif args.kind == "graph":
        value = args.degree + 1
    else:
        if args.num_vars is None:
            raise ValueError("--kind hypersurface needs --num-vars")
        value = hypersurface_count(args.num_vars, args.degree)
    if args.json:
        print(json.dumps({"kind": args.kind, "degree": args.degree, "count": value}))
    else:
        print(value)
    return 0


def _format_bn_report(rep) -> str:
    c = rep.curve
    lines = [
        f"curve class: genus {c.g}, degree {c.d}, in P^{c.r}",
        f"rho = {rep.rho}",
    ]
    if not rep.bn_exists:
        lines.append("brill-noether component: none (rho < 0)")
    else:
        lines.append(f"brill-noether component: dimension {rep.bn_dim}")
    if rep.expected_points is not None:
        lines.append(f"expected interpolation count: {rep.expected_points}")
    if rep.interpolates == NOT_APPLICABLE:
        lines.append("interpolates expected count: not applicable")
    elif rep.interpolates == "yes":
        lines.append("interpolates expected count: yes")
    else:
        lines.append("interpolates expected count: NO (exceptional class)")
        lines.append(f"obstruction: {rep.exception_note} (bound {rep.obstruction_bound})")
    lines.append(
        f"normal bundle interpolation (char {rep.characteristic}): "
        + ("yes" if rep.nb_interpolation else "no")
    )
    if rep.char2_constraint_violated:
        lines.append("characteristic-2 parity constraint violated: d != 1 (mod r-1)")
    return "\n".join(lines)


def cmd_bn_query(args) -> int:
    rep = interpolation_verdict(CurveClass(args.g, args.r, args.d), args.characteristic)
    if args.json:
        print(json.dumps(rep.to_json_obj(), indent=2))
    else:
        print(_format_bn_report(rep))
    return 0


def cmd_bn_table(args) -> int:
    reports = bn_table(args.g_max, args.r_max, args.d_max)
    text = bn_table_csv(reports)
    Path(args.out).write_text(text)
    if args.json:
        print(json.dumps({"rows": len(reports), "out": args.out}))
    else:
        print(f"wrote {len(reports)} rows to {args.out}")
    return 0


def _parse_message(field: PrimeField, text: str) -> Message:
    return Message(field, tuple(field.parse(part) for part in text.split(",")))


def cmd_rs_encode(args) -> int:
    field = PrimeField(args.p)
    message = _parse_message(field, args.message)
    codeword = rs_encode(message, args.k)
    _emit(codeword.to_json(), args.out)
    return 0


def cmd_rs_corrupt(args) -> int:
    codeword = Codeword.from_json(Path(args.codeword_file).read_text())
    corrupted, changed = rs_corrupt(codeword, args.index, codeword.field.parse(args.value))
    if not changed:
        print("note: replacement equals the original value (no-op)", file=sys.stderr)
    _emit(corrupted.to_json(), args.out)
    return 0


def cmd_rs_decode(args) -> int:
    codeword = Codeword.from_json(Path(args.codeword_file).read_text())
    try:
        message = rs_decode(codeword)
    except DetectedError as exc:
        if args.json:
            print(json.dumps({"status": "detected-error", "detail": str(exc)}))
        else:
            print(f"error detected: {exc}")
        return 0
    except AmbiguousDecodeError as exc:
        if args.json:
            print(json.dumps({"status": "ambiguous", "detail": str(exc)}))
        else:
            print(f"ambiguous decode: {exc}")
        return 0
    text = ",".join(str(c) for c in message.coefficients)
    if args.json:
        print(json.dumps({"status": "ok", "message": [str(c) for c in message.coefficients]}))
    else:
        print(f"decoded message: {text}")
    return 0


def cmd_rs_demo(args) -> int:
    field = PrimeField(args.p)
    n = args.n
    rng = SeededRng(args.seed)
    message = Message(field, tuple(field.sample(rng) for _ in range(n)))
    codeword = rs_encode(message, 2)
    index = rng.randrange(n + 2)
    old_y = codeword.pairs[index][1]
    new_y = field.add(old_y, 1 + rng.randrange(field.p - 1))
    corrupted, _ = rs_corrupt(codeword, index, new_y)
    consistent = rs_detect(corrupted)
    decoded = rs_decode(corrupted)
    recovered = decoded.coefficients == message.coefficients
    if args.json:
        print(
            json.dumps(
                {
                    "p": field.p,
                    "message": [str(c) for c in message.coefficients],
                    "codeword": codeword.to_json_obj(),
                    "corrupt_index": index,
                    "corrupt_value": str(new_y),
                    "detect_consistent": consistent,
                    "decoded": [str(c) for c in decoded.coefficients],
                    "recovered": recovered,
                },
                indent=2,
            )
        )
        return 0
    fmt = lambda values: ", ".join(str(v) for v in values)
    print(f"field: F_{field.p}")
    print(f"message ({n} values): {fmt(message.coefficients)}")
    print(f"encoded with redundancy 2: {fmt(f'({x},{y})' for x, y in codeword.pairs)}")
    print(f"corrupting value at node x={corrupted.pairs[index][0]}: {old_y} -> {new_y}")
    print(f"detection says consistent: {consistent}")
    print(f"decoded message: {fmt(decoded.coefficients)}")
    print(f"matches original: {recovered}")
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(suite=args.suite, prime=args.prime, trials=args.trials, seed=args.seed)
    report = run_suite(cfg)
    if args.json:
        print(report.to_json())
        return 0
    expected = report.to_json_obj()
    print(f"suite {report.suite} over F_{report.prime}, {report.trials} trials, seed {report.seed}")
    print(
        f"at expected count: {expected['at_count']['pass']} pass, "
        f"{expected['at_count']['fail']} fail"
    )
    print(
        f"one point over: {expected['over_count']['pass']} pass, "
        f"{expected['over_count']['fail']} fail"
    )
    for failure in report.failures:
        print(
            f"  failure in trial {failure['trial']} ({failure['phase']}): "
            f"kernel dimension {failure['kernel_dim']}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interpoly",
        description="Exact curve fitting, interpolation counts, and the "
        "single-error correction protocol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit all curves of a family through a point file")
    p.add_argument("points_file", help="CSV of points with a '# field=...' header")
    p.add_argument("--basis", required=True, help="line|circle|conic|cubic|quadric_surface|plane(d)|graph(d)|full(d)")
    p.add_argument("--degree", type=int, default=None, help="degree for plane/graph/full bases")
    p.add_argument("--out", default=None, help="also write the report to this file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_fit)

    p = sub.add_parser("count", help="how many general points a family interpolates")
    p.add_argument("--kind", choices=["plane", "hypersurface", "graph"], required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--num-vars", type=int, default=None, dest="num_vars")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("bn-query", help="Brill-Noether report for one (g, r, d)")
    p.add_argument("g", type=int)
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--characteristic", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_bn_query)

    p = sub.add_parser("bn-table", help="CSV of reports over a (g, r, d) box")
    p.add_argument("--g-max", type=int, required=True, dest="g_max")
    p.add_argument("--r-max", type=int, required=True, dest="r_max")
    p.add_argument("--d-max", type=int, required=True, dest="d_max")
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_bn_table)

    p = sub.add_parser("rs-encode", help="encode a message as polynomial values")
    p.add_argument("--p", type=int, required=True, help="prime field modulus")
    p.add_argument("--message", required=True, help="comma-separated values")
    p.add_argument("--k", type=int, choices=[0, 1, 2], default=2, help="redundancy")
    p.add_argument("--out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_rs_encode)

    p = sub.add_parser("rs-corrupt", help="replace one value of a codeword file")
    p.add_argument("codeword_file")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--value", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_rs_corrupt)

    p = sub.add_parser("rs-decode", help="decode a codeword file, correcting if possible")
    p.add_argument("codeword_file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_rs_decode)

    p = sub.add_parser("rs-demo", help="end-to-end encode/corrupt/detect/correct run")
    p.add_argument("--p", type=int, default=101)
    p.add_argument("--n", type=int, default=4, help="message length")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_rs_demo)

    p = sub.add_parser("verify", help="randomized check of a classical count")
    p.add_argument("--suite", required=True, help="line|circle|conic|cubic|quadric_surface|plane(d)|graph(d)")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, TypeError, OSError, KeyError, IndexError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
