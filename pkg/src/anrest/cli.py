"""Command-line front end: ``anrest basis|verify|counterexample-sl3|compare-sl4|sweep``.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error (including
a non-dominant weight), 3 dimension cap exceeded, 4 internal inconsistency
between two independent exact computations.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .cartan import weyl_dim
from .repbuild import DEFAULT_DIM_CAP, DimensionCapExceeded, InconsistencyError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_INCONSISTENT = 0, 1, 2, 3, 4

log = logging.getLogger("anrest")


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        m = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be comma-separated integers, got {text!r}")
    if any(x < 0 for x in m):
        raise argparse.ArgumentTypeError(f"weight {text} is not dominant")
    return m


def _weight_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rank", type=int, required=True, help="n for sl(n+1)")
    p.add_argument("--weight", type=parse_weight, required=True, help="m1,m2,...,mn")


def _check_rank(parser: argparse.ArgumentParser, args) -> None:
    if args.rank < 1:
        parser.error("--rank must be at least 1")
    if len(args.weight) != args.rank:
        parser.error(f"--weight has {len(args.weight)} entries but --rank is {args.rank}")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_basis(args, out=None) -> int:
    out = out or sys.stdout
    from .littelmann import enumerate_basis, format_tuple, tuple_weight

    basis = enumerate_basis(args.weight)
    if args.count_only:
        print(len(basis), file=out)
        return EXIT_OK
    if args.json:
        rows = [{"tuple": format_tuple(a), "weight": list(tuple_weight(args.weight, a))} for a in basis]
        print(_dumps({"weight": list(args.weight), "count": len(basis), "basis": rows}), file=out)
        return EXIT_OK
    for a in basis:
        mu = ",".join(map(str, tuple_weight(args.weight, a)))
        print(f"{format_tuple(a)}\t{mu}", file=out)
    return EXIT_OK


def _print_report(report, out) -> None:
    print(f"sl({report.rank + 1}) weight {','.join(map(str, report.weight))}: dim {report.dim}", file=out)
    print(f"  generators {report.generator_count}  min generators {report.min_generator_count}", file=out)
    print(f"  commutant {report.commutant_dim}  radical {report.radical_dim}", file=out)
    if report.commutant_dim_cartan is not None:
        print(f"  with Cartan: commutant {report.commutant_dim_cartan}  radical {report.radical_dim_cartan}", file=out)
    width = max(len(c.name) for c in report.checks)
    for c in report.checks:
        flag = "ok  " if c.passed else "FAIL"
        tail = f"  ({c.detail})" if c.detail and not c.passed else ""
        print(f"  [{flag}] {c.name:<{width}}{tail}".rstrip(), file=out)
    if report.repair is not None:
        print(f"  diagnostic repaired set: {' | '.join(report.repair)}", file=out)
    print(report.verdict, file=out)


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    from .pipeline import verify

    keep: list = []
    try:
        report = verify(args.weight, dim_cap=args.dim_cap, with_cartan=args.with_cartan, realization_out=keep)
    except DimensionCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except InconsistencyError as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.dump_matrices:
        from .repbuild import dump_matrices

        with open(args.dump_matrices, "w") as fh:
            dump_matrices(keep[0], fh)
    if args.json or args.stable_json:
        print(_dumps(report.to_dict(stable=args.stable_json)), file=out)
    else:
        _print_report(report, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_counterexample_sl3(args, out=None) -> int:
    out = out or sys.stdout
    from .decomp import sl3_counterexample

    res = sl3_counterexample()
    if args.json:
        print(_dumps(res), file=out)
    else:
        for key, r in res.items():
            print(
                f"weight {key}: dim {r['dim']}, Jordan type of Y1+Y2 {tuple(r['jordan_type'])}, "
                f"{r['blocks']} block(s), fifth power zero: {r['fifth_power_zero']}",
                file=out,
            )
    ok = res["1,0"]["jordan_type"] == [3] and res["1,1"]["blocks"] >= 2 and res["1,1"]["fifth_power_zero"]
    return EXIT_OK if ok else EXIT_FAIL


def cmd_compare_sl4(args, out=None) -> int:
    """Report only: mismatches are informational and do not change the exit code."""
    out = out or sys.stdout
    from .littelmann import compare_sl4_closed_form

    weights = [args.weight] if args.weight else [(1, 1, 1), (0, 1, 1)]
    for lam in weights:
        if len(lam) != 3:
            print("error: closed forms exist for rank 3 only", file=sys.stderr)
            return EXIT_USAGE
        rep = compare_sl4_closed_form(lam).as_dict()
        if args.json:
            print(_dumps(rep), file=out)
            continue
        print(f"weight {','.join(map(str, lam))}: {'match' if rep['equal'] else 'MISMATCH'}", file=out)
        print(f"  predicate   ({len(rep['predicate'])}): {' | '.join(rep['predicate'])}", file=out)
        print(f"  closed form ({len(rep['closed_form'])}): {' | '.join(rep['closed_form'])}", file=out)
        for key in ("only_predicate", "only_closed_form", "closed_form_outside_basis"):
            if rep[key]:
                print(f"  {key}: {' | '.join(rep[key])}", file=out)
    return EXIT_OK


def sweep_weights(rank_max: int, coeff_max: int):
    for n in range(1, rank_max + 1):
        yield from itertools.product(range(coeff_max + 1), repeat=n)


def _sweep_one(job: tuple[tuple[int, ...], int]) -> dict:
    lam, cap = job
    from .pipeline import verify

    base = {"weight": list(lam), "rank": len(lam), "weyl_dim": weyl_dim(lam)}
    if base["weyl_dim"] > cap:
        return {**base, "status": "SKIP", "reason": f"dim above cap {cap}"}
    try:
        rep = verify(lam, dim_cap=cap)
    except InconsistencyError as e:
        return {**base, "status": "ERROR", "reason": str(e)}
    return {**base, "status": rep.verdict, "report": rep.to_dict()}


def cmd_sweep(args, out=None) -> int:
    out = out or sys.stdout
    jobs = [(lam, args.dim_cap) for lam in sweep_weights(args.rank_max, args.coeff_max)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, jobs))
    else:
        results = [_sweep_one(j) for j in jobs]
    sink = open(args.output, "w") if args.output else out
    try:
        for r in results:
            print(_dumps(r), file=sink)
    finally:
        if args.output:
            sink.close()
    counts: dict[str, int] = {}
    for r in results:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    failing = [r["weight"] for r in results if r["status"] in ("FAIL", "ERROR")]
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    print(f"sweep: {len(results)} runs: {summary}", file=sys.stderr)
    for w in failing:
        print(f"  failing weight {','.join(map(str, w))}", file=sys.stderr)
    return EXIT_FAIL if failing else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anrest",
        description="Generators and indecomposability of sl(n+1) modules restricted to the alternating abelian subalgebra.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="list the Littelmann basis")
    _weight_args(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_basis, needs_weight=True)

    p = sub.add_parser("verify", help="run the full verification pipeline")
    _weight_args(p)
    p.add_argument("--dim-cap", type=int, default=DEFAULT_DIM_CAP)
    p.add_argument("--with-cartan", action="store_true", help="also test indecomposability with the Cartan subalgebra added")
    p.add_argument("--dump-matrices", metavar="PATH")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--stable-json", action="store_true", help="JSON without the timings block")
    p.set_defaults(func=cmd_verify, needs_weight=True)

    p = sub.add_parser("counterexample-sl3", help="Jordan types of Y1+Y2 on two sl(3) modules")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexample_sl3)

    p = sub.add_parser("compare-sl4", help="compare the generator predicate with the sl(4) closed forms")
    p.add_argument("--weight", type=parse_weight)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare_sl4)

    p = sub.add_parser("sweep", help="verify every weight of a grid; writes JSON lines")
    p.add_argument("--rank-max", type=int, default=4)
    p.add_argument("--coeff-max", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--dim-cap", type=int, default=500)
    p.add_argument("--output", metavar="PATH", help="JSON-lines file (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    if getattr(args, "needs_weight", False):
        _check_rank(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
