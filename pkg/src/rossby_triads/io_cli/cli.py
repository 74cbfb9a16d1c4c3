"""Command-line entry point: ``rossby-triads <subcommand> ...``."""
from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
import time
from pathlib import Path

from .. import __version__
from ..core import TriadClass, classify_triad
from ..exceptions import TriadError
from ..fiber import fiber_point_table, hyperelliptic_bounded_search, make_fiber, torsion_scan, zonal_zero_denominators
from ..oracle import (
    b_zero_violations, conjecture1_scan, growth_functions, lambda_sets, oracle_fibers, oracle_naive,
)
from ..parametrization import SearchRegion, box_norm, default_workers
from .bench import run_bench
from .cache import cached_region_hits, default_cache_dir
from .serialize import format_rational, triad_rows, write_table_csv, write_triads_csv, write_triads_jsonl, write_vectors_csv
from .svg import scatter_svg

log = logging.getLogger("rossby_triads")


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _header(args, elapsed, **extra):
    cfg = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    info = {"version": __version__, "config": cfg, "elapsed_s": round(elapsed, 3), **extra}
    print("# rossby-triads " + json.dumps(info, default=str, sort_keys=True), file=sys.stderr)


def _workers(args):
    return default_workers() if args.workers is None else args.workers


def cmd_enumerate(args):
    cache = None if args.no_cache else (args.cache_dir or default_cache_dir())
    region = SearchRegion(args.param_bound, enforce_inequality=not args.no_region_check)
    hits, cached = cached_region_hits(region, box=args.box, workers=_workers(args), cache_dir=cache)
    rows = triad_rows(hits, expanded=not args.orbits)
    with _output(args.output) as fh:
        (write_triads_csv if args.format == "csv" else write_triads_jsonl)(rows, fh)
    print(f"{len(hits)} orbits, {len(rows)} rows", file=sys.stderr)
    return {"orbits": len(hits), "rows": len(rows), "cache_hit": cached}


def _fraction_cell(v):
    return "inf" if v is None else (str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}")


def cmd_fiber(args):
    with _output(args.output) as fh:
        if args.sequence:
            for d in zonal_zero_denominators(args.sequence):
                print(d, file=fh)
            return {"sequence": args.sequence}
        curve = make_fiber(args.a, args.b)
        if args.multiples:
            rows = fiber_point_table(curve, args.multiples)
            if args.format == "csv":
                write_table_csv(rows, fh)
            else:
                cells = [("", "Z", "W", "x", "y")]
                cells += [(r.label, *(_fraction_cell(v) for v in (*r.point, *r.xy))) for r in rows]
                widths = [max(len(c[i]) for c in cells) for i in range(5)]
                for c in cells:
                    print("  ".join(s.rjust(w) for s, w in zip(c, widths)).rstrip(), file=fh)
        if args.torsion:
            for line in torsion_scan(curve).lines():
                print(line, file=fh)
    return {}


def cmd_lambda(args):
    sets = lambda_sets(args.box, args.backend, args.sweep_bound, workers=_workers(args),
                       max_columns=args.max_columns)
    vecs = sets.lam_prime if args.primitive else sets.lam
    name = "Lambda'" if args.primitive else "Lambda"
    with _output(args.output) as fh:
        if args.out == "svg":
            fh.write(scatter_svg(vecs, args.box, title=f"{name}, |a|,|b| <= {args.box} ({sets.describe()})"))
        else:
            write_vectors_csv(vecs, fh)
    if sets.skipped:
        print(f"warning: {len(sets.skipped)} fibers skipped by the work budget", file=sys.stderr)
    return {"points": len(vecs), "backend": sets.describe()}


def cmd_oracle(args):
    if args.method == "naive":
        hits = oracle_naive(args.box)
        quads = list(hits)
    else:
        quads = sorted(oracle_fibers(args.box))
    with _output(args.output) as fh:
        print("a,b,x,y,class,in_box", file=fh)
        for q in quads:
            print(f"{q.a},{q.b},{q.x},{q.y},{classify_triad(q).value},{int(box_norm(q) <= args.box)}", file=fh)
    nontrivial = sum(classify_triad(q) == TriadClass.NONTRIVIAL for q in quads)
    print(f"{len(quads)} canonical quads, {nontrivial} nontrivial", file=sys.stderr)
    return {"quads": len(quads), "nontrivial": nontrivial}


def cmd_conjectures(args):
    with _output(args.output) as fh:
        viol = conjecture1_scan(args.box, args.sweep_bound, backend=args.backend, workers=_workers(args))
        print(f"a^2 >= 3 b^8 among positive Lambda members, |a|,|b| <= {args.box} "
              f"(backend {args.backend}, sweep bound {args.sweep_bound}):", file=fh)
        for v in viol:
            print(f"  ({v.a},{v.b}) witness (x,y)={v.witness} primitive={v.primitive}", file=fh)
        if not viol:
            print("  none", file=fh)
        bz = b_zero_violations(args.b_zero)
        print(f"b = 0, entries in [-{args.b_zero},{args.b_zero}]: "
              f"{'no nontrivial triads' if not bz else bz}", file=fh)
        if args.hyper_height:
            pts = hyperelliptic_bounded_search(args.hyper_height)
            shown = ["inf" if p.x is None else f"({format_rational(p.x)},{format_rational(p.y)})" for p in pts]
            print(f"genus 2 search, height <= {args.hyper_height}: {', '.join(shown)}", file=fh)
    return {"violations": len(viol)}


def cmd_growth(args):
    with _output(args.output) as fh:
        for n in args.N:
            rep = growth_functions(n, max(args.a_cutoff, n), args.backend, args.sweep_bound, workers=_workers(args))
            print(rep.line(), file=fh)
    return {}


def cmd_bench(args):
    report = run_bench(args.suite, args.sizes, args.repeat, _workers(args))
    with _output(args.report) as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return {}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rossby-triads", description="Integer resonant triads of Rossby waves.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")
        sp.add_argument("--workers", type=int, default=None, help="process count (default $ROSSBY_WORKERS or 1)")

    e = sub.add_parser("enumerate", help="sweep the parameter cube")
    e.add_argument("--param-bound", "-S", type=int, required=True)
    e.add_argument("--box", "-N", type=int, default=None)
    e.add_argument("--no-region-check", action="store_true", help="drop the inequality that picks one sheet")
    e.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    g = e.add_mutually_exclusive_group()
    g.add_argument("--orbits", action="store_true", help="one row per orbit representative")
    g.add_argument("--expanded", action="store_true", help="all 24 members per orbit (default)")
    e.add_argument("--cache-dir", type=Path, default=None)
    e.add_argument("--no-cache", action="store_true")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("fiber", help="rational points and torsion of one fiber")
    f.add_argument("--a", type=int, default=1)
    f.add_argument("--b", type=int, default=1)
    f.add_argument("--multiples", type=int, default=0)
    f.add_argument("--format", choices=("table", "csv"), default="table")
    f.add_argument("--torsion", action="store_true")
    f.add_argument("--sequence", type=int, default=0, help="first K zonal denominators on C(1,1)")
    common(f)
    f.set_defaults(func=cmd_fiber)

    lam = sub.add_parser("lambda", help="wavevector sets in a box")
    lam.add_argument("--box", "-N", type=int, required=True)
    lam.add_argument("--backend", choices=("exact", "sweep"), default="exact")
    lam.add_argument("--sweep-bound", type=int, default=200)
    lam.add_argument("--out", choices=("csv", "svg"), default="csv")
    lam.add_argument("--primitive", action="store_true", help="emit Lambda' instead of Lambda")
    lam.add_argument("--max-columns", type=int, default=2_000_000, help="per-fiber work budget")
    common(lam)
    lam.set_defaults(func=cmd_lambda)

    o = sub.add_parser("oracle", help="brute-force surface points in a box")
    o.add_argument("--box", "-N", type=int, required=True)
    o.add_argument("--method", choices=("naive", "fiber"), default="naive")
    common(o)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("conjectures", help="scan for large-a members and b = 0 triads")
    c.add_argument("--box", "-N", type=int, default=1000)
    c.add_argument("--backend", choices=("exact", "sweep"), default="sweep")
    c.add_argument("--sweep-bound", type=int, default=200)
    c.add_argument("--b-zero", type=int, default=200)
    c.add_argument("--hyper-height", type=int, default=0)
    common(c)
    c.set_defaults(func=cmd_conjectures)

    gr = sub.add_parser("growth", help="count tables F1, F2, F3")
    gr.add_argument("--N", type=int, nargs="+", required=True)
    gr.add_argument("--a-cutoff", type=int, required=True)
    gr.add_argument("--backend", choices=("exact", "sweep"), default="exact")
    gr.add_argument("--sweep-bound", type=int, default=200)
    common(gr)
    gr.set_defaults(func=cmd_growth)

    b = sub.add_parser("bench", help="timing report")
    b.add_argument("--suite", choices=("enumerate", "oracle"), required=True)
    b.add_argument("--sizes", type=int, nargs="+", required=True)
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--report", default="-", help="JSON report path (default stdout)")
    b.add_argument("--workers", type=int, default=None)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    t0 = time.perf_counter()
    try:
        extra = args.func(args) or {}
    except (TriadError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _header(args, time.perf_counter() - t0, **extra)
    return 0


if __name__ == "__main__":
    sys.exit(main())
