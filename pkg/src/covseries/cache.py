"""On-disk cache of computed series, one JSON file per form degree."""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .poly import FactoredRational, from_dict, to_dict
from .springer import poincare_series, verify_dimensions

# value of the "generator" header field; part of the file format
GENERATOR_TAG = "theorem3"

BATCH_IMAX = 6
BATCH_JMAX = 12


class CacheInvalid(Exception):
    """A cache file is unreadable, mislabelled, or fails re-verification."""


def cache_path(cache_dir: str | os.PathLike, d: int) -> Path:
    return Path(cache_dir) / f"poincare_d{d}.json"


def write_cache(path: str | os.PathLike, d: int, F: FactoredRational, imax: int, jmax: int) -> None:
    payload = {"d": d, "generator": GENERATOR_TAG, "verified_to": {"imax": imax, "jmax": jmax}}
    payload.update(to_dict(F))
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(payload) + "\n", encoding="utf-8")
    os.replace(tmp, path)


def load_cache(path: str | os.PathLike, d: int, imax: int = 4, jmax: int | None = None) -> FactoredRational:
    """Read a cached series, trusting it only after re-checking a corner of the grid."""
    if jmax is None:
        jmax = 2 * imax
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        F = from_dict(payload)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CacheInvalid(f"{path}: unreadable ({exc})") from exc
    if payload.get("d") != d or payload.get("generator") != GENERATOR_TAG:
        raise CacheInvalid(f"{path}: header does not match d={d}")
    report = verify_dimensions(d, imax, jmax, series=F)
    if not report.passed:
        raise CacheInvalid(f"{path}: " + "; ".join(report.lines()[:5]))
    return F


@dataclass
class BatchEntry:
    d: int
    status: str  # "cached", "computed", "recomputed" or "failed"
    seconds: float
    detail: str = ""


def _compute_one(d: int, cache_dir: str) -> BatchEntry:
    path = cache_path(cache_dir, d)
    start = time.perf_counter()
    status = "computed"
    detail = ""
    if path.exists():
        try:
            load_cache(path, d, BATCH_IMAX, BATCH_JMAX)
            return BatchEntry(d, "cached", time.perf_counter() - start)
        except CacheInvalid as exc:
            os.replace(path, path.with_name(path.name + ".bad"))
            status, detail = "recomputed", str(exc)
    F = poincare_series(d)
    report = verify_dimensions(d, BATCH_IMAX, BATCH_JMAX, series=F)
    if not report.passed:
        return BatchEntry(d, "failed", time.perf_counter() - start, "; ".join(report.lines()[:5]))
    write_cache(path, d, F, BATCH_IMAX, BATCH_JMAX)
    return BatchEntry(d, status, time.perf_counter() - start, detail)


def batch(dmax: int, cache_dir: str | os.PathLike, workers: int | None = None):
    """Fill the cache for ``d = 1..dmax``, yielding one entry per degree in order."""
    cache_dir = str(cache_dir)
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    degrees = range(1, dmax + 1)
    workers = workers or os.cpu_count() or 1
    if workers == 1:
        for d in degrees:
            yield _compute_one(d, cache_dir)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # largest degrees dominate the runtime, so submit them first
        futures = {d: pool.submit(_compute_one, d, cache_dir) for d in reversed(degrees)}
        for d in degrees:
            yield futures[d].result()
