"""Shared brute-force oracles, all independent of the library's scan paths."""

from __future__ import annotations

import pytest

from capkit import GroupParams


def iter_vectors(m: int, n: int):
    """All digit tuples of Z_m^n in encoded-index order (digit 0 fastest)."""
    vecs = []
    for idx in range(m**n):
        t = []
        x = idx
        for _ in range(n):
            x, d = divmod(x, m)
            t.append(d)
        vecs.append(tuple(t))
    return vecs


def brute_force_witness(member_indices, p: GroupParams, k: int):
    """Enumerate every (start, diff != 0) over the whole group and return the
    first proper k-progression lying inside the member set, else None."""
    m, n = p.m, p.n
    card = p.cardinality
    members = set(member_indices)
    vecs = iter_vectors(m, n)

    def enc(t):
        x = 0
        for d in reversed(t):
            x = x * m + d
        return x

    for s_idx in range(card):
        start = vecs[s_idx]
        for d_idx in range(1, card):
            diff = vecs[d_idx]
            terms = [start]
            cur = start
            for _ in range(k - 1):
                cur = tuple((a + b) % m for a, b in zip(cur, diff))
                terms.append(cur)
            idxs = [enc(t) for t in terms]
            if len(set(idxs)) == k and all(i in members for i in idxs):
                return terms
    return None


def proper_ap_masks(p: GroupParams, k: int) -> list[int]:
    """Every proper k-progression of Z_m^n as a bitmask of member indices."""
    m, n = p.m, p.n
    card = p.cardinality
    vecs = iter_vectors(m, n)

    def enc(t):
        x = 0
        for d in reversed(t):
            x = x * m + d
        return x

    masks = set()
    for s_idx in range(card):
        start = vecs[s_idx]
        for d_idx in range(1, card):
            diff = vecs[d_idx]
            terms = [start]
            cur = start
            for _ in range(k - 1):
                cur = tuple((a + b) % m for a, b in zip(cur, diff))
                terms.append(cur)
            idxs = [enc(t) for t in terms]
            if len(set(idxs)) == k:
                masks.add(sum(1 << i for i in set(idxs)))
    return sorted(masks)


def naive_max_size(p: GroupParams, k: int) -> int:
    """Maximum k-progression-free subset size by scanning all 2^(m^n) subsets."""
    card = p.cardinality
    assert card <= 16, "naive enumeration is for m^n <= 16"
    masks = proper_ap_masks(p, k)
    best = 0
    for subset in range(1 << card):
        size = subset.bit_count()
        if size <= best:
            continue
        if all(mask & subset != mask for mask in masks):
            best = size
    return best


@pytest.fixture
def rng():
    import random

    return random.Random(20240801)
