"""Timing harness comparing the parametric sweep with the brute-force oracles."""
from __future__ import annotations

import hashlib
import platform
import time

from .. import __version__
from ..oracle import oracle_fibers, oracle_naive
from ..parametrization import SearchRegion, default_workers, expand_orbits, region_hits

__all__ = ["result_digest", "bench_enumerate", "naive_extrapolation", "bench_oracle", "run_bench"]


def result_digest(items) -> str:
    h = hashlib.sha256()
    for it in sorted(items):
        h.update(repr(tuple(it)).encode())
    return h.hexdigest()[:16]


def bench_enumerate(sizes, repeat: int = 1, workers: int | None = None, box: int = 5000) -> list[dict]:
    out = []
    for S in sizes:
        runs, digests, count = [], set(), None
        for _ in range(repeat):
            tm: dict = {}
            t0 = time.perf_counter()
            hits = region_hits(SearchRegion(S), box=box, workers=workers, timings=tm)
            t1 = time.perf_counter()
            quads = expand_orbits(hits)
            tm["expand"] = time.perf_counter() - t1
            tm["total"] = time.perf_counter() - t0
            runs.append({k: round(v, 4) for k, v in tm.items()})
            digests.add(result_digest(quads))
            count = len(hits)
        out.append({"param_bound": S, "box": box, "orbits": count, "quads": 24 * count if count else 0,
                    "runs": runs, "deterministic": len(digests) == 1, "digest": digests.pop()})
    return out


def naive_extrapolation(target: int = 5000, probe: int = 24) -> dict:
    """Time the naive search on a small box and scale by the (2N+1)^4 work."""
    t0 = time.perf_counter()
    oracle_naive(probe)
    dt = time.perf_counter() - t0
    per = dt / (2 * probe + 1) ** 4
    est = per * (2 * target + 1) ** 4
    return {"box": target, "extrapolated": True, "probe_box": probe, "probe_seconds": round(dt, 4),
            "seconds_per_quad": per, "estimated_seconds": est, "estimated_years": est / 3.15576e7}


def bench_oracle(sizes, repeat: int = 1) -> list[dict]:
    out = []
    for N in sizes:
        runs, agree = [], True
        for _ in range(repeat):
            t0 = time.perf_counter()
            naive = set(oracle_naive(N))
            t1 = time.perf_counter()
            fib = oracle_fibers(N)
            t2 = time.perf_counter()
            agree &= naive == fib
            runs.append({"naive": round(t1 - t0, 4), "fiber": round(t2 - t1, 4)})
        out.append({"box": N, "points": len(naive), "agree": agree, "runs": runs,
                    "digest": result_digest(naive)})
    return out


def run_bench(suite: str, sizes, repeat: int = 1, workers: int | None = None) -> dict:
    workers = default_workers() if workers is None else workers
    report = {"version": __version__, "python": platform.python_version(), "machine": platform.machine(),
              "suite": suite, "workers": workers, "repeat": repeat}
    if suite == "enumerate":
        report["results"] = bench_enumerate(sizes, repeat, workers)
        report["naive"] = naive_extrapolation()
    elif suite == "oracle":
        report["results"] = bench_oracle(sizes, repeat)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return report
