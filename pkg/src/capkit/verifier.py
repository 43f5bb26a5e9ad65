"""Decide whether a finite set contains a proper k-term progression.

The scan treats every ordered pair (a, b) of distinct members as the first
two terms of a candidate progression (difference b - a), generates the
remaining k-2 terms, and tests membership and properness.  Every proper
k-progression inside the set is seen at least once this way, and the
witness returned is always the first in lexicographic
(encode(a), encode(b)) order, so golden outputs are stable.

Cost is O(|S|^2 * k), independent of the ambient group size; that is what
makes sets of a few thousand points inside groups of tens of millions of
elements checkable.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import kernels
from .groups import ApWitness, GroupParams, GroupVec, decode, is_proper, make_witness, vsub
from .pointset import PointSet

#: Chunks per worker when the ordered-pair range is split across threads.
_CHUNKS_PER_WORKER = 4


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a progression scan."""

    k: int
    pairs_scanned: int
    witness: ApWitness | None
    elapsed: float
    membership: str  # "bitset" or "hash"
    backend: str  # "cython" or "python"

    @property
    def free(self) -> bool:
        return self.witness is None


def resolve_threads(requested: int | None) -> int:
    """Worker count: the request (default 1) capped by CAPKIT_THREADS."""
    threads = 1 if requested is None else max(1, requested)
    cap = os.environ.get("CAPKIT_THREADS")
    if cap:
        threads = min(threads, max(1, int(cap)))
    return threads


def _witness_from_pair(s: PointSet, k: int, ia: int, ib: int) -> ApWitness:
    p = s.params
    a = decode(s.members[ia], p)
    b = decode(s.members[ib], p)
    return make_witness(a, vsub(b, a, p), k, p)


def verify(s: PointSet, k: int, threads: int | None = None) -> VerifyReport:
    """Full scan; returns a report with the first witness if any exists.

    With threads > 1 the outer range is chunked and the witness is still the
    lexicographically first; pairs_scanned then sums whatever the completed
    chunks examined, so it can exceed the sequential early-exit count.
    """
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    t0 = time.perf_counter()
    membership = s.bitset if s.bitset is not None else s.member_set
    kind = "bitset" if s.bitset is not None else "hash"
    backend = kernels.BACKEND if kind == "bitset" else "python"
    m, n = s.params.m, s.params.n
    nm = len(s.members)

    if nm < k:
        return VerifyReport(k, 0, None, time.perf_counter() - t0, kind, backend)

    workers = resolve_threads(threads)
    if workers <= 1 or nm < 64:
        ia, ib, pairs = kernels.scan_pairs(s.members, m, n, k, membership)
        witness = None if ia < 0 else _witness_from_pair(s, k, ia, ib)
        return VerifyReport(k, pairs, witness, time.perf_counter() - t0, kind, backend)

    # Partition the outer index range; the first chunk (in order) holding a
    # witness also holds the lexicographically first one, so reduce in order.
    nchunks = min(nm, workers * _CHUNKS_PER_WORKER)
    bounds = [(nm * i) // nchunks for i in range(nchunks + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(nchunks)]
    pairs_total = 0
    found: tuple[int, int] | None = None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(kernels.scan_pairs, s.members, m, n, k, membership, lo, hi)
            for lo, hi in ranges
        ]
        for fut in futures:
            ia, ib, pairs = fut.result()
            pairs_total += pairs
            if ia >= 0:
                found = (ia, ib)
                for later in futures:
                    later.cancel()
                break
    witness = None if found is None else _witness_from_pair(s, k, *found)
    return VerifyReport(k, pairs_total, witness, time.perf_counter() - t0, kind, backend)


def find_witness(s: PointSet, k: int, threads: int | None = None) -> ApWitness | None:
    """Some proper k-progression inside s, or None when the set is free."""
    return verify(s, k, threads=threads).witness


def sample_check(
    member_oracle: Callable[[GroupVec], bool],
    sampler: Callable[[random.Random], GroupVec],
    k: int,
    trials: int,
    seed: int,
    params: GroupParams,
) -> ApWitness | None:
    """Randomized falsification for implicitly defined sets.

    Each trial draws a member from the sampler and a uniform nonzero
    difference, then tests whether the whole k-progression stays inside the
    set and is proper.  One-sided: None is evidence, not proof.  The
    generator is Python's Mersenne Twister seeded with `seed`, so runs are
    reproducible.
    """
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    rng = random.Random(seed)
    m, n = params.m, params.n
    for _ in range(trials):
        start = sampler(rng)
        while True:
            d = tuple(rng.randrange(m) for _ in range(n))
            if any(d):
                break
        diff = GroupVec(d)
        cur = start
        terms = [start]
        inside = True
        for _ in range(k - 1):
            cur = GroupVec(tuple((x + y) % m for x, y in zip(cur.digits, diff.digits)))
            if not member_oracle(cur):
                inside = False
                break
            terms.append(cur)
        if inside and is_proper(terms):
            return make_witness(start, diff, k, params)
    return None
