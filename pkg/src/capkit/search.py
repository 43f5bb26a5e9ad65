"""Exact maximum k-progression-free sets by branch and bound.

Small instances only: the searcher walks candidate indices in increasing
order, keeping a set of forbidden points (anything completing a proper
progression with two chosen points, for k = 3) or re-filtering candidates
by pairwise extension (k >= 4).  The admissible bound |chosen| +
|remaining candidates| never prunes a true optimum, so an exhausted tree
certifies the maximum.

The k = 3 completion table includes the midpoint solutions of 2x = a + b:
for even m every even coordinate sum admits two midpoint digits x and
x + m/2, and forgetting them silently accepts progressions like (a, x, b).

With assume_zero the root fixes the point 0: progression-freeness is
translation invariant, so some optimal translate contains 0.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product as iproduct

from . import kernels
from .groups import GroupParams, decode_digits, encode_digits
from .pointset import PointSet
from .verifier import resolve_threads

#: Exact search keeps a per-pair completion table; beyond this many group
#: elements the table (and the tree) leaves desk scale.
MAX_SEARCH_POINTS = 512


@dataclass(frozen=True)
class SearchConfig:
    time_budget: float = 600.0  # seconds
    assume_zero: bool = True
    parallel: bool = False
    initial: PointSet | None = None

    def __post_init__(self) -> None:
        if self.time_budget <= 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class SearchResult:
    best: PointSet
    size: int
    optimal: bool
    nodes: int
    elapsed: float


def _midpoint_digits(m: int, s: int) -> list[int]:
    """Solutions x of 2x = s mod m (0, 1 or 2 of them)."""
    if m % 2 == 1:
        return [(s * ((m + 1) // 2)) % m]  # 2 is invertible
    if s % 2 == 1:
        return []
    half = s // 2
    return [half, (half + m // 2) % m]


def _pair_completion_mask(va: tuple, vb: tuple, m: int) -> int:
    """Bitmask of points c with {a, b, c} carrying a proper 3-progression
    (c as either endpoint or as a midpoint)."""
    diff = tuple((y - x) % m for x, y in zip(va, vb))
    found = set()
    after = tuple((y + d) % m for y, d in zip(vb, diff))
    before = tuple((x - d) % m for x, d in zip(va, diff))
    for cand in (after, before):
        if cand != va and cand != vb:
            found.add(encode_digits(cand, m))
    per = [_midpoint_digits(m, (x + y) % m) for x, y in zip(va, vb)]
    if all(per):
        for mid in iproduct(*per):
            if mid != va and mid != vb:
                found.add(encode_digits(mid, m))
    mask = 0
    for c in found:
        mask |= 1 << c
    return mask


def completion_masks(p: GroupParams) -> list[list[int]]:
    """comp[a][b] for every ordered pair of group elements."""
    m, n = p.m, p.n
    card = p.cardinality
    if card > MAX_SEARCH_POINTS:
        raise ValueError(
            f"group has {card} elements; exact search supports at most {MAX_SEARCH_POINTS}"
        )
    vecs = [decode_digits(i, m, n) for i in range(card)]
    comp: list[list[int]] = [[0] * card for _ in range(card)]
    for a in range(card):
        for b in range(a + 1, card):
            mask = _pair_completion_mask(vecs[a], vecs[b], m)
            comp[a][b] = mask
            comp[b][a] = mask
    return comp


def _creates_kap(chosen: list[int], cand: int, k: int, vecs, m: int) -> bool:
    """True iff chosen + {cand} contains a proper k-progression (chosen is
    assumed free, so any progression found uses cand)."""
    pts = chosen + [cand]
    pset = set(pts)
    for a in pts:
        va = vecs[a]
        for b in pts:
            if a == b:
                continue
            vb = vecs[b]
            diff = tuple((y - x) % m for x, y in zip(va, vb))
            cur = vb
            enc = [a, b]
            ok = True
            for _ in range(k - 2):
                cur = tuple((y + d) % m for y, d in zip(cur, diff))
                e = encode_digits(cur, m)
                if e not in pset:
                    ok = False
                    break
                enc.append(e)
            if ok and len(set(enc)) == k:
                return True
    return False


def greedy_lower(p: GroupParams, k: int) -> PointSet:
    """Scan indices upward, keeping every point that creates no proper
    k-progression with the kept set.  Deterministic; desk scale."""
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    m, n = p.m, p.n
    card = p.cardinality
    vecs = [decode_digits(i, m, n) for i in range(card)]
    chosen: list[int] = []
    if k == 3:
        forbidden = 0
        for x in range(card):
            if forbidden >> x & 1:
                continue
            for c in chosen:
                forbidden |= _pair_completion_mask(vecs[c], vecs[x], m)
            chosen.append(x)
    else:
        for x in range(card):
            if not _creates_kap(chosen, x, k, vecs, m):
                chosen.append(x)
    return PointSet(p, chosen)


def max_apfree(p: GroupParams, k: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Certified maximum k-progression-free set size for Z_m^n, m^n small."""
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    cfg = cfg or SearchConfig()
    card = p.cardinality
    if card > MAX_SEARCH_POINTS:
        raise ValueError(
            f"group has {card} elements; exact search supports at most {MAX_SEARCH_POINTS}"
        )
    t0 = time.perf_counter()
    incumbent: list[int] = []
    if cfg.initial is not None:
        if cfg.initial.params != p:
            raise ValueError("warm-start set lives in a different group")
        incumbent = list(cfg.initial.members)

    if k == 3:
        best_set, nodes, exhausted = _run_k3(p, cfg, incumbent)
    else:
        best_set, nodes, exhausted = _run_k_general(p, k, cfg, incumbent)
    elapsed = time.perf_counter() - t0
    return SearchResult(
        best=PointSet(p, best_set),
        size=len(best_set),
        optimal=exhausted,
        nodes=nodes,
        elapsed=elapsed,
    )


def _run_k3(p: GroupParams, cfg: SearchConfig, incumbent: list[int]):
    card = p.cardinality
    comp = completion_masks(p)
    full = (1 << card) - 1
    if cfg.assume_zero:
        init_chosen = [0]
        init_cand = full & ~1
    else:
        init_chosen = []
        init_cand = full
    best_init = max(len(incumbent), len(init_chosen))

    if not cfg.parallel:
        best, nodes, exhausted = kernels.bb_run(
            comp, card, init_chosen, init_cand, cfg.time_budget, best_init
        )
        best_set = best if best is not None else (incumbent or init_chosen)
        return best_set, nodes, exhausted

    # Parallel: expand the first branching level in-process, then run each
    # include-subtree independently and reduce by (size, lexicographic set).
    subproblems = []
    cand = init_cand
    chosen = list(init_chosen)
    while cand:
        low = cand & -cand
        x = low.bit_length() - 1
        forb = 0
        for c in chosen:
            forb |= comp[c][x]
        subproblems.append((chosen + [x], cand & ~low & ~forb))
        cand &= ~low
    deadline = time.monotonic() + cfg.time_budget
    workers = resolve_threads(None)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [
            pool.submit(
                kernels.bb_run, comp, card, ch, cd,
                max(0.001, deadline - time.monotonic()), best_init,
            )
            for ch, cd in subproblems
        ]
        results = [f.result() for f in futures]
    nodes = 1 + sum(r[1] for r in results)
    exhausted = all(r[2] for r in results)
    best_set = incumbent or list(init_chosen)
    best_key = (len(best_set), [-i for i in sorted(best_set)])
    for r_best, _, _ in results:
        if r_best is None:
            continue
        key = (len(r_best), [-i for i in sorted(r_best)])
        if key > best_key:
            best_key = key
            best_set = sorted(r_best)
    return best_set, nodes, exhausted


def _run_k_general(p: GroupParams, k: int, cfg: SearchConfig, incumbent: list[int]):
    card = p.cardinality
    m, n = p.m, p.n
    vecs = [decode_digits(i, m, n) for i in range(card)]
    if cfg.assume_zero:
        chosen = [0]
        cand = [x for x in range(1, card) if not _creates_kap([0], x, k, vecs, m)]
    else:
        chosen = []
        cand = list(range(card))
    best = [max(len(incumbent), len(chosen)), incumbent or chosen.copy()]
    state = {"nodes": 0, "timed_out": False}
    deadline = time.monotonic() + cfg.time_budget

    def dfs(chosen: list[int], cand: list[int]) -> None:
        while True:
            state["nodes"] += 1
            if state["timed_out"] or (
                (state["nodes"] & 0xFF) == 0 and time.monotonic() > deadline
            ):
                state["timed_out"] = True
                return
            if len(chosen) + len(cand) <= best[0]:
                return
            if not cand:
                best[0] = len(chosen)
                best[1] = chosen.copy()
                return
            x = cand[0]
            new_chosen = chosen + [x]
            new_cand = [y for y in cand[1:] if not _creates_kap(new_chosen, y, k, vecs, m)]
            dfs(new_chosen, new_cand)
            if state["timed_out"]:
                return
            cand = cand[1:]

    dfs(chosen, cand)
    return best[1], state["nodes"], not state["timed_out"]
