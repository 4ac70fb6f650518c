"""Exact vertex distances as minima over canonical path classes.

d(0, i) equals the shortest canonical class length for i, so a distance
query is a scan over 2 + 4*T class lengths.  Two entry points share that
scan: a scalar one that also reports the minimizing class and its vertex
sequence, and a vectorized one used for whole eccentricity ranges.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import bounds_report
from .params import CirculantParams, check_vertex
from .paths import (
    CCW,
    CW,
    Family,
    PathClass,
    realize_path,
    t_range,
    translate_endpoints,
)

# numpy block size for range queries; bounds peak memory, not results
_CHUNK = 1 << 20


@dataclass(frozen=True)
class DistanceResult:
    """A distance value with the class that attains it and one realization."""

    value: int
    argmin_class: PathClass
    realized: tuple[int, ...]


def wrap_limit(p: CirculantParams) -> int:
    """Largest wrap count t whose classes can still attain a distance.

    A class with wrap count t has length at least floor(((t-1)*n + 1)/s),
    while every distance is at most the combined diameter bound.  A class
    longer than that bound can never be a minimum (the minimum itself is a
    distance), so wraps past the crossover are dropped.  This cuts the
    per-vertex scan from 2 + 4*s/gcd(n, s) lengths to a handful once n is
    large relative to s.
    """
    cap = bounds_report(p).combined
    # floor(((t-1)*n + 1)/s) <= cap  iff  t <= 1 + (s*cap + s - 2)/n
    keep = 1 + (p.s * cap + p.s - 2) // p.n
    return max(1, min(t_range(p), keep))


def _build_class(p: CirculantParams, i: int, family: Family, t: int) -> PathClass:
    """Materialize one canonical class from its (family, wrap count) tag."""
    s = p.s
    if family is Family.P1 or family is Family.P2:
        q, r = divmod(i, s)
        if family is Family.P1:
            return PathClass(r, CW, q, CW, Family.P1)
        return PathClass(s - r, CCW, q + 1, CW, Family.P2)
    if family is Family.P1T or family is Family.P2T:
        q_t, r_t = divmod(t * p.n + i, s)
        if family is Family.P1T:
            return PathClass(r_t, CW, q_t, CW, Family.P1T, t)
        return PathClass(s - r_t, CCW, q_t + 1, CW, Family.P2T, t)
    q_b, r_b = divmod(t * p.n - i, s)
    if family is Family.P3T:
        return PathClass(r_b, CCW, q_b, CCW, Family.P3T, t)
    return PathClass(s - r_b, CW, q_b + 1, CCW, Family.P4T, t)


def distance_from_zero(p: CirculantParams, i: int) -> DistanceResult:
    """d(0, i) plus a minimizing class and its realized vertex sequence.

    Ties break on (length, family order P1 < P2 < P1T < P2T < P3T < P4T,
    then smallest t) so outputs are reproducible.  i = 0 and i = 1 are
    immediate; everything else scans the pruned class lengths arithmetically
    and materializes only the winner.
    """
    check_vertex(p, i)
    if i == 0:
        return DistanceResult(0, PathClass(0, CW, 0, CW, Family.P1), (0,))
    if i == 1:
        return DistanceResult(1, PathClass(1, CW, 0, CW, Family.P1), (0, 1))
    n, s = p.n, p.s
    q, r = divmod(i, s)
    best = (r + q, Family.P1, 0)
    cand = (1 + s - r + q, Family.P2, 0)
    if cand < best:
        best = cand
    for t in range(1, wrap_limit(p) + 1):
        q_t, r_t = divmod(t * n + i, s)
        q_b, r_b = divmod(t * n - i, s)
        for cand in (
            (r_t + q_t, Family.P1T, t),
            (1 + s - r_t + q_t, Family.P2T, t),
            (r_b + q_b, Family.P3T, t),
            (1 + s - r_b + q_b, Family.P4T, t),
        ):
            if cand < best:
                best = cand
    value, family, t = best
    pc = _build_class(p, i, family, t)
    seq, _ = realize_path(p, pc, i)
    return DistanceResult(value, pc, tuple(seq))


def distance(p: CirculantParams, i: int, j: int) -> DistanceResult:
    """d(i, j) by translating the pair to start at vertex 0."""
    return distance_from_zero(p, translate_endpoints(p, i, j))


def distance_range(p: CirculantParams, lo: int, hi: int) -> np.ndarray:
    """d(0, i) for every i in [lo, hi] as an int64 array.

    Same minimization as distance_from_zero, evaluated with numpy over the
    index range and a loop over the pruned wrap counts.  Intermediates are
    bounded by (s + 1) * n, inside int64 for the documented n <= 2**31.
    """
    if lo < 0 or hi >= p.n or lo > hi:
        raise ValueError(f"index range [{lo}, {hi}] outside [0, {p.n})")
    n, s = p.n, p.s
    t_limit = wrap_limit(p)
    out = np.empty(hi - lo + 1, dtype=np.int64)
    for start in range(lo, hi + 1, _CHUNK):
        stop = min(hi, start + _CHUNK - 1)
        idx = np.arange(start, stop + 1, dtype=np.int64)
        q, r = np.divmod(idx, s)
        best = np.minimum(r + q, 1 + s - r + q)
        for t in range(1, t_limit + 1):
            q_t, r_t = np.divmod(t * n + idx, s)
            np.minimum(best, r_t + q_t, out=best)
            np.minimum(best, 1 + s - r_t + q_t, out=best)
            q_b, r_b = np.divmod(t * n - idx, s)
            np.minimum(best, r_b + q_b, out=best)
            np.minimum(best, 1 + s - r_b + q_b, out=best)
        out[start - lo : stop - lo + 1] = best
    return out
