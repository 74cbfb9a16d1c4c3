"""Content-addressed storage for sweep results."""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from ..core import Quad
from ..parametrization import SearchRegion, region_hits

__all__ = ["default_cache_dir", "cache_key", "cached_region_hits"]

_FORMAT = 1


def default_cache_dir() -> Path:
    env = os.environ.get("ROSSBY_CACHE")
    return Path(env) if env else Path.home() / ".cache" / "rossby_triads"


def cache_key(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:24]


def cached_region_hits(region: SearchRegion, box=None, wave_box=None, workers=None,
                       cache_dir: Path | None = None, timings: dict | None = None):
    """``region_hits`` backed by a file named after a hash of its arguments.

    Returns ``(hits, from_cache)``. Worker count is not part of the key since
    it does not change the result.
    """
    config = {"format": _FORMAT, "bound": region.bound, "inequality": region.enforce_inequality,
              "box": box, "wave_box": wave_box}
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / f"sweep-{cache_key(config)}.json"
        if path.exists():
            data = json.loads(path.read_text())
            hits = {Quad(*r[:4]): tuple(r[4:]) for r in data["hits"]}
            return dict(sorted(hits.items())), True
    hits = region_hits(region, box=box, wave_box=wave_box, workers=workers, timings=timings)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"config": config, "hits": [[*q, *stw] for q, stw in hits.items()]}))
        tmp.replace(path)
    return hits, False
