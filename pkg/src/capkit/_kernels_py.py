"""Pure-Python kernels: the reference twin of the compiled extension.

Same algorithms and same branching order as capkit._kernels, so results
(including node counts) are bit-for-bit identical; only the speed differs.
"""

from __future__ import annotations

import time
from typing import Sequence


def scan_pairs(
    members: Sequence[int],
    m: int,
    n: int,
    k: int,
    membership,
    start: int = 0,
    stop: int | None = None,
) -> tuple[int, int, int]:
    """Scan ordered pairs (members[ia], members[ib]) with ia in [start, stop),
    treating each pair as the first two terms of a k-progression.  Returns
    (ia, ib, pairs_scanned) for the first proper progression fully inside
    the set, or (-1, -1, pairs_scanned).

    membership: a dense bitset (bytes/bytearray, bit i = index i) or any
    container supporting `in` over encoded indices.
    """
    if stop is None:
        stop = len(members)
    powers = [m**j for j in range(n)]
    digits = [None] * len(members)
    for i, idx in enumerate(members):
        row = []
        x = idx
        for _ in range(n):
            x, d = divmod(x, m)
            row.append(d)
        digits[i] = row

    dense = isinstance(membership, (bytes, bytearray))
    pairs = 0
    nm = len(members)
    for ia in range(start, stop):
        a_idx = members[ia]
        da = digits[ia]
        for ib in range(nm):
            if ib == ia:
                continue
            pairs += 1
            db = digits[ib]
            # walk the remaining k-2 terms
            cur = db
            enc = [a_idx, members[ib]]
            ok = True
            diff = [(db[j] - da[j]) % m for j in range(n)]
            for _ in range(k - 2):
                nxt = [(cur[j] + diff[j]) % m for j in range(n)]
                e = 0
                for j in range(n):
                    e += nxt[j] * powers[j]
                if dense:
                    if not membership[e >> 3] >> (e & 7) & 1:
                        ok = False
                        break
                elif e not in membership:
                    ok = False
                    break
                enc.append(e)
                cur = nxt
            if ok and len(set(enc)) == k:
                return ia, ib, pairs
    return -1, -1, pairs


def bb_run(
    comp: Sequence[Sequence[int]],
    n_points: int,
    init_chosen: Sequence[int],
    init_cand: int,
    budget_s: float,
    best_init: int,
) -> tuple[list[int] | None, int, bool]:
    """Depth-first branch and bound for a maximum set avoiding the pairwise
    completion constraints in `comp` (comp[a][b] = bitmask of points that
    finish a forbidden configuration with a and b).

    Branches on the lowest candidate index, include-branch first.  Returns
    (best or None if nothing beat best_init, nodes, exhausted).
    """
    deadline = time.monotonic() + budget_s
    best_size = best_init
    best_set: list[int] | None = None
    nodes = 0
    timed_out = False
    check_mask = 0xFFF  # look at the clock every 4096 nodes

    def dfs(cand: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set, nodes, timed_out
        nodes += 1
        if timed_out or (nodes & check_mask) == 0 and time.monotonic() > deadline:
            timed_out = True
            return
        size = len(chosen)
        if size + cand.bit_count() <= best_size:
            return
        if cand == 0:
            best_size = size
            best_set = chosen.copy()
            return
        low = cand & -cand
        x = low.bit_length() - 1
        forb = 0
        for c in chosen:
            forb |= comp[c][x]
        chosen.append(x)
        dfs(cand & ~low & ~forb, chosen)
        chosen.pop()
        if timed_out:
            return
        dfs(cand & ~low, chosen)

    dfs(init_cand, list(init_chosen))
    return best_set, nodes, not timed_out
