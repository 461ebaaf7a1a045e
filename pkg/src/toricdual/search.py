"""Brute-force enumeration of selfdual subsets of a lattice box."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .config import LatticeConfiguration, validate
from .errors import TooLarge
from .selfdual import SelfdualVerdict, classify

__all__ = ["SearchJob", "SearchHit", "run_search", "weak_invariant", "DEFAULT_BUDGET", "worker_count"]

DEFAULT_BUDGET = 2_000_000
WORKERS_ENV = "TORICDUAL_WORKERS"


@dataclass(frozen=True)
class SearchJob:
    box: tuple[int, ...]
    size: int
    k: int
    knap_only: bool = False
    selfdual_only: bool = True
    dedup: bool = False
    budget: int = DEFAULT_BUDGET

    def grid(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(l + 1) for l in self.box)))

    def count(self) -> int:
        return comb(len(self.grid()), self.size)


@dataclass(frozen=True)
class SearchHit:
    indices: tuple[int, ...]
    configuration: LatticeConfiguration
    verdict: SelfdualVerdict


def worker_count() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def weak_invariant(points) -> tuple:
    """Canonical form under translations and signed coordinate permutations.

    These are affine unimodular maps, so equal keys always mean equivalent
    sets; other affine equivalences are not detected.
    """
    pts = [tuple(p) for p in points]
    n = len(pts[0])
    best = None
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            moved = [tuple(s * p[i] for s, i in zip(signs, perm)) for p in pts]
            low = [min(q[j] for q in moved) for j in range(n)]
            key = tuple(sorted(tuple(x - l for x, l in zip(q, low)) for q in moved))
            if best is None or key < best:
                best = key
    return best


def _keep(job: SearchJob, v: SelfdualVerdict) -> bool:
    if job.selfdual_only and not v.selfdual:
        return False
    if job.knap_only and not v.knap.is_knap:
        return False
    return True


def _scan_prefix(args) -> list[tuple[tuple[int, ...], SelfdualVerdict]]:
    job, grid, first = args
    out = []
    for rest in itertools.combinations(range(first + 1, len(grid)), job.size - 1):
        idx = (first,) + rest
        cfg = validate([grid[i] for i in idx])
        v = classify(cfg, job.k, warn=False)
        if _keep(job, v):
            out.append((idx, v))
    return out


def run_search(job: SearchJob, workers: Optional[int] = None) -> Iterator[SearchHit]:
    """Yield qualifying subsets in lexicographic order of their index tuples.

    Work is sharded by the first index; shards are collected in order so the
    output does not depend on the number of workers.
    """
    if job.size < 1:
        raise ValueError("subset size must be positive")
    total = job.count()
    if total > job.budget:
        raise TooLarge(f"{total} subsets exceed the budget of {job.budget}")
    grid = job.grid()
    shards = [(job, grid, first) for first in range(len(grid) - job.size + 1)]
    workers = worker_count() if workers is None else workers
    seen: set = set()
    if workers <= 1 or len(shards) <= 1:
        results = map(_scan_prefix, shards)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_scan_prefix, shards)
    try:
        for shard in results:
            for idx, v in shard:
                pts = [grid[i] for i in idx]
                if job.dedup:
                    key = weak_invariant(pts)
                    if key in seen:
                        continue
                    seen.add(key)
                yield SearchHit(idx, validate(pts), v)
    finally:
        if workers > 1 and len(shards) > 1:
            pool.shutdown()
