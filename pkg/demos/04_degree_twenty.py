"""
Up to degree twenty, with a cache
=================================

Every series up to d = 20 is computed, checked on a corner of the dimension
grid, and written as JSON.  A second pass only re-reads and re-checks.
"""

import tempfile

from covseries.cache import batch, cache_path, load_cache

with tempfile.TemporaryDirectory() as cache:
    for entry in batch(20, cache, workers=1):
        print(f"d={entry.d:2d} {entry.status:9s} {entry.seconds:.3f}s")
    print("second pass:", {e.status for e in batch(20, cache, workers=1)})

    P20 = load_cache(cache_path(cache, 20), 20, imax=6, jmax=12)
    biggest = max(abs(c) for c in P20.numerator.terms.values())
    print("P_20 numerator:", len(P20.numerator), "terms, largest coefficient", biggest)
    print("P_20 denominator factors:", [(f.a, f.b, f.m) for f in P20.denominator])
