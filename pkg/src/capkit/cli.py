"""Command-line surface.

Subcommands: construct, verify, bound, search, digits, convert.  All
machine-readable output is a single JSON report (switch with --json) with
the fixed version tag capkit-report/1.  Exit codes: 0 success or FREE,
1 witness found, 2 usage or malformed input, 3 construction failure.

Randomized library entry points take mandatory integer seeds and use
Python's Mersenne Twister; nothing is seeded from the clock.  The
environment variable CAPKIT_THREADS caps the worker count of --threads.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .codes import TABLES
from .constructions import (
    ConstructionError,
    alpha_estimate,
    behrend_shell,
    classify_digit_aps,
    coding_lower_bound,
    coding_system,
    equal_frequency_set,
    komlos_set,
    materialize,
    mod11_k4,
    primepower_digits_A,
    primepower_digits_B,
    product,
    r4_system,
    salem_spencer_odd,
    theorem_k,
)
from .groups import GroupParams
from .pointset import load_capset
from .reformulation import load_capsys, save_capsys, system_from_set
from .search import SearchConfig, max_apfree
from .verifier import verify

USAGE_EXIT = 2
CONSTRUCTION_EXIT = 3


def _report(args: argparse.Namespace, params: dict, outputs: dict, elapsed: float) -> dict:
    return {
        "version": "capkit-report/1",
        "command": " ".join(["capkit"] + getattr(args, "argv", [])),
        "subcommand": args.command,
        "params": params,
        "outputs": outputs,
        "elapsed_s": round(elapsed, 6),
    }


def _emit(report: dict, human: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report))
    else:
        for line in human:
            print(line)


def _default_t(n: int) -> int:
    # the weight threshold that maximizes the coding bound for n <= 10
    return 0 if n < 2 else -((5 - 2 * n) // 3)


def _cmd_construct(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    method = args.method
    k = args.k
    if method == "coding":
        n = _require(args, "n")
        _check_m(args, 4)
        t = args.t if args.t is not None else _default_t(n)
        s = materialize(coding_system(n, t))
        k = k or 3
    elif method == "komlos":
        n = _require(args, "n")
        _check_m(args, 4)
        s = komlos_set(n)
        k = k or 3
    elif method == "salem":
        s = salem_spencer_odd(_require(args, "m"), _require(args, "n"))
        k = k or 3
    elif method == "behrend":
        s, shell = behrend_shell(_require(args, "m"), _require(args, "n"), args.r_prime)
        k = k or 3
    elif method == "mod11":
        _check_m(args, 11)
        s = mod11_k4(_require(args, "n"))
        k = k or 4
    elif method in ("prime-power-a", "prime-power-b"):
        p = _require(args, "p")
        sexp = _require(args, "s")
        digits = (
            primepower_digits_A(p, sexp)
            if method == "prime-power-a"
            else primepower_digits_B(p, sexp)
        )
        if args.m is not None and args.m != digits.m:
            raise ValueError(f"--m {args.m} disagrees with p^s = {digits.m}")
        s = equal_frequency_set(digits, _require(args, "n"))
        k = k or theorem_k(digits)
    elif method == "r4":
        n = _require(args, "n")
        _check_m(args, 4)
        s = materialize(r4_system(n))
        k = k or 4
    elif method == "product":
        if len(args.inputs or []) != 2:
            raise ValueError("product needs exactly two --in files")
        s = product(load_capset(args.inputs[0]), load_capset(args.inputs[1]))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown method {method}")
    s.save(args.output)
    elapsed = time.perf_counter() - t0
    outputs = {
        "file": args.output,
        "m": s.params.m,
        "n": s.params.n,
        "size": len(s),
        "alpha_estimate": round(alpha_estimate(max(len(s), 1), s.params.n), 6),
    }
    if k:
        outputs["k"] = k
    if method == "behrend":
        outputs["r_prime"] = shell.r_prime
        outputs["shell_count"] = shell.count
    report = _report(
        args,
        {"method": method, "m": args.m, "n": args.n, "k": k, "t": args.t,
         "p": args.p, "s": args.s, "r_prime": args.r_prime, "inputs": args.inputs},
        outputs,
        elapsed,
    )
    _emit(report, [
        f"method={method} m={s.params.m} n={s.params.n} size={len(s)}",
        f"wrote {args.output}",
    ], args.json)
    return 0


def _require(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise ValueError(f"--{name.replace('_', '-')} is required for this method")
    return value


def _check_m(args: argparse.Namespace, expected: int) -> None:
    if args.m is not None and args.m != expected:
        raise ValueError(f"method {args.method} works over Z_{expected}^n, got --m {args.m}")


def _cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    s = load_capset(args.input)
    report = verify(s, args.k, threads=args.threads)
    elapsed = time.perf_counter() - t0
    outputs: dict = {
        "size": len(s),
        "k": args.k,
        "free": report.free,
        "pairs_scanned": report.pairs_scanned,
        "membership": report.membership,
        "backend": report.backend,
        "witness": None if report.free else report.witness.as_dict(s.params),
    }
    doc = _report(args, {"input": args.input, "k": args.k}, outputs, elapsed)
    if report.free:
        _emit(doc, ["FREE"], args.json)
        return 0
    w = report.witness
    _emit(doc, [
        "WITNESS",
        f"start={' '.join(map(str, w.start.digits))}",
        f"diff={' '.join(map(str, w.diff.digits))}",
        "terms=" + "; ".join(" ".join(map(str, t.digits)) for t in w.terms),
    ], args.json)
    return 1


def _cmd_bound(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    table = TABLES[args.table]
    breakdowns = [coding_lower_bound(n, table) for n in range(1, args.n_max + 1)]
    elapsed = time.perf_counter() - t0
    doc = _report(
        args,
        {"n_max": args.n_max, "table": args.table},
        {"bounds": [b.to_json() for b in breakdowns]},
        elapsed,
    )
    human = [
        f"n={b.n} t={b.t} total={b.total} terms={'+'.join(map(str, b.terms))}"
        for b in breakdowns
    ]
    _emit(doc, human, args.json)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    p = GroupParams(args.m, args.n)
    cfg = SearchConfig(
        time_budget=args.budget,
        assume_zero=not args.no_assume_zero,
        parallel=args.parallel,
    )
    result = max_apfree(p, args.k, cfg)
    elapsed = time.perf_counter() - t0
    outputs = {
        "m": args.m,
        "n": args.n,
        "k": args.k,
        "size": result.size,
        "optimal": result.optimal,
        "nodes": result.nodes,
        "best": list(result.best.members),
    }
    doc = _report(
        args,
        {"m": args.m, "n": args.n, "k": args.k, "budget": args.budget,
         "assume_zero": not args.no_assume_zero, "parallel": args.parallel},
        outputs,
        elapsed,
    )
    human = [f"size={result.size} optimal={str(result.optimal).lower()} nodes={result.nodes}"]
    if args.output:
        result.best.save(args.output)
        human.append(f"wrote {args.output}")
        doc["outputs"]["file"] = args.output
    _emit(doc, human, args.json)
    return 0


def _cmd_digits(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    if args.variant == "a":
        d = primepower_digits_A(args.p, args.s)
    else:
        d = primepower_digits_B(args.p, args.s)
    k = args.k if args.k is not None else theorem_k(d)
    report = classify_digit_aps(d, k)
    elapsed = time.perf_counter() - t0
    outputs = {
        "m": d.m,
        "family": d.family,
        "digits": list(d.digits),
        "special": list(d.special),
        "size": len(d.digits),
        "k": k,
        "class_counts": report.class_counts,
        "violations": [
            {"start": v.start, "gap": v.gap, "terms": list(v.terms), "reason": v.reason}
            for v in report.violations
        ],
    }
    doc = _report(
        args,
        {"p": args.p, "s": args.s, "variant": args.variant, "k": k},
        outputs,
        elapsed,
    )
    human = [
        f"m={d.m} family={d.family} |D|={len(d.digits)} special={list(d.special)}",
        f"digits={' '.join(map(str, d.digits))}",
        f"k={k} classes={report.class_counts} violations={len(report.violations)}",
    ]
    _emit(doc, human, args.json)
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    src, dst = args.input, args.output
    if dst.endswith(".capsys"):
        s = load_capset(src)
        save_capsys(system_from_set(s), dst)
        direction = "capset->capsys"
    elif dst.endswith(".capset"):
        sys_ = load_capsys(src)
        materialize(sys_).save(dst)
        direction = "capsys->capset"
    else:
        raise ValueError("output must end in .capset or .capsys")
    elapsed = time.perf_counter() - t0
    doc = _report(
        args, {"input": src, "output": dst}, {"direction": direction}, elapsed
    )
    _emit(doc, [f"{direction}: wrote {dst}"], args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capkit",
        description="Progression-free sets in Z_m^n: construct, verify, bound, search.",
        epilog="Randomized library routines use Python's Mersenne Twister with "
               "mandatory integer seeds; nothing seeds from the clock.  "
               "CAPKIT_THREADS caps the worker count of verify --threads.",
    )
    parser.add_argument("--version", action="version", version=f"capkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a point set and write a capset file")
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int, help="progression length the set avoids (report only)")
    c.add_argument(
        "--method",
        required=True,
        choices=[
            "salem", "behrend", "komlos", "coding", "mod11",
            "prime-power-a", "prime-power-b", "product", "r4",
        ],
    )
    c.add_argument("--t", type=int, help="weight threshold for the coding method")
    c.add_argument("--p", type=int, help="prime for the prime-power methods")
    c.add_argument("--s", type=int, help="exponent for the prime-power methods")
    c.add_argument("--r-prime", type=int, dest="r_prime", help="scaled squared shell radius")
    c.add_argument("--in", action="append", dest="inputs", metavar="FILE",
                   help="input capset (twice) for the product method")
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="scan a capset file for proper k-progressions")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--threads", type=int, help="workers (capped by CAPKIT_THREADS)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bound", help="coding lower-bound table over Z_4^n")
    b.add_argument("--n-max", type=int, required=True, dest="n_max")
    b.add_argument("--table", choices=sorted(TABLES), default="paper")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bound)

    s = sub.add_parser("search", help="exact maximum by branch and bound")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--budget", type=float, default=600.0, help="seconds (default 600)")
    s.add_argument("--no-assume-zero", action="store_true")
    s.add_argument("--parallel", action="store_true")
    s.add_argument("-o", "--output")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_search)

    d = sub.add_parser("digits", help="prime-power digit alphabet and its classification")
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--s", type=int, required=True)
    d.add_argument("--variant", choices=["a", "b"], required=True)
    d.add_argument("--k", type=int)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=_cmd_digits)

    cv = sub.add_parser("convert", help="map between capset and capsys files (modulus 4)")
    cv.add_argument("-i", "--input", required=True)
    cv.add_argument("-o", "--output", required=True)
    cv.add_argument("--json", action="store_true")
    cv.set_defaults(func=_cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = list(sys.argv[1:] if argv is None else argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return CONSTRUCTION_EXIT
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
