"""Subset-system view of Z_4^n.

Writing each digit as a = r + 2q with r, q in {0, 1} splits a point of
Z_4^n into an index vector r in F_2^n and a member vector q in F_2^n.
A subset of Z_4^n is then exactly a system A(x) of subsets of F_2^n,
one per index x, and progression-freeness turns into sumset conditions:

* no 3-AP  <=>  for every x and distinct a1, a2 in A(x), the set at
  x ^ a1 ^ a2 is empty                                   (star condition)
* no 4-AP  <=>  no distinct x, y with x ^ y in both full sumsets
  A(x)+A(x) and A(y)+A(y)                           (star-star condition)

Systems are stored as one bitmask per index; all masks are 2^n bits wide.
The star-star check uses full sumsets: for distinct x, y the difference
x ^ y is nonzero, so including the a = a' diagonal (which only ever adds 0)
cannot change the verdict.

capsys v1 format::

    n=<n>
    <x bits>: <member bits> <member bits> ...    (nonempty sets only,
    ...                                           sorted by x)

Bit strings print coordinate 0 first, like every other format here.
"""

from __future__ import annotations

import io
import os
import random
from dataclasses import dataclass
from typing import Iterator

from .groups import GroupParams
from .pointset import PointSet


@dataclass(frozen=True)
class SubsetSystem:
    """An assignment x -> A(x) of subsets of F_2^n, as 2^n bitmasks."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        size = 1 << self.n
        if len(self.masks) != size:
            raise ValueError(f"expected {size} masks, got {len(self.masks)}")
        for x, mask in enumerate(self.masks):
            if not 0 <= mask < (1 << size):
                raise ValueError(f"mask at index {x} wider than 2^{self.n} bits")

    def members(self, x: int) -> Iterator[int]:
        mask = self.masks[x]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def set_sizes(self) -> list[int]:
        return [m.bit_count() for m in self.masks]


def total_size(sys: SubsetSystem) -> int:
    """Sum of |A(x)| over all indices."""
    return sum(m.bit_count() for m in sys.masks)


@dataclass(frozen=True)
class StarViolation:
    """A concrete failure of the star or star-star condition."""

    kind: str  # "star" or "star-star"
    x: int
    a1: int
    a2: int
    y: int

    def replay(self, sys: SubsetSystem) -> bool:
        if self.kind == "star":
            ax = sys.masks[self.x]
            return bool(
                self.a1 != self.a2
                and ax >> self.a1 & 1
                and ax >> self.a2 & 1
                and self.y == self.x ^ self.a1 ^ self.a2
                and sys.masks[self.y] != 0
            )
        d = self.x ^ self.y
        return bool(
            self.x != self.y
            and d == self.a1  # a1 doubles as the offending difference
            and _in_full_sumset(sys.masks[self.x], d)
            and _in_full_sumset(sys.masks[self.y], d)
        )


def _mask_elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def restricted_sumset(mask: int) -> int:
    """Bitmask of {a ^ a' : a, a' in mask, a != a'}."""
    els = _mask_elements(mask)
    out = 0
    for i, a in enumerate(els):
        for b in els[i + 1 :]:
            out |= 1 << (a ^ b)
    return out


def full_sumset(mask: int) -> int:
    """Bitmask of {a ^ a' : a, a' in mask}; adds only 0 to the restricted set."""
    if mask == 0:
        return 0
    return restricted_sumset(mask) | 1


def _in_full_sumset(mask: int, d: int) -> bool:
    return full_sumset(mask) >> d & 1 == 1


def check_star(sys: SubsetSystem) -> StarViolation | None:
    """None iff for every x and distinct a1, a2 in A(x) the set at
    x ^ a1 ^ a2 is empty."""
    for x, mask in enumerate(sys.masks):
        if mask == 0:
            continue
        els = _mask_elements(mask)
        for i, a1 in enumerate(els):
            for a2 in els[i + 1 :]:
                y = x ^ a1 ^ a2
                if sys.masks[y]:
                    return StarViolation(kind="star", x=x, a1=a1, a2=a2, y=y)
    return None


def check_star_star(sys: SubsetSystem) -> StarViolation | None:
    """None iff no distinct x, y have x ^ y in both full sumsets
    A(x)+A(x) and A(y)+A(y)."""
    size = 1 << sys.n
    sums = [full_sumset(m) for m in sys.masks]
    for x in range(size):
        sx = sums[x]
        if sx == 0:
            continue
        for y in range(x + 1, size):
            d = x ^ y
            if sx >> d & 1 and sums[y] >> d & 1:
                return StarViolation(kind="star-star", x=x, a1=d, a2=d, y=y)
    return None


# -- conversion to and from point sets over Z_4^n --------------------------


def _spread_base4(x: int, n: int) -> int:
    """Place bit j of x at the 4^j digit slot (digit value 0 or 1)."""
    out = 0
    for j in range(n):
        if x >> j & 1:
            out += 1 << (2 * j)
    return out


def materialize(sys: SubsetSystem) -> PointSet:
    """The subset of Z_4^n with digits r_j + 2*q_j for each index r and
    member q; its size equals total_size(sys)."""
    n = sys.n
    params = GroupParams(4, n)
    members = []
    for x, mask in enumerate(sys.masks):
        base = _spread_base4(x, n)
        q = mask
        while q:
            low = q & -q
            member = low.bit_length() - 1
            q ^= low
            members.append(base + 2 * _spread_base4(member, n))
    return PointSet(params, members)


def system_from_set(s: PointSet) -> SubsetSystem:
    """Inverse of materialize: split each digit a = r + 2q and collect the
    q-vectors per index vector r.  Requires modulus 4."""
    if s.params.m != 4:
        raise ValueError(f"subset systems require modulus 4, got {s.params.m}")
    n = s.params.n
    masks = [0] * (1 << n)
    for t in s.digit_tuples():
        r = 0
        q = 0
        for j, d in enumerate(t):
            r |= (d & 1) << j
            q |= (d >> 1) << j
        masks[r] |= 1 << q
    return SubsetSystem(n=n, masks=tuple(masks))


# -- subspace utilities -----------------------------------------------------


def is_linear_subspace(mask: int, n: int) -> bool:
    """True iff mask is nonempty, contains 0, and is closed under xor."""
    if mask == 0 or not mask & 1:
        return False
    els = _mask_elements(mask)
    for i, a in enumerate(els):
        for b in els[i:]:
            if not mask >> (a ^ b) & 1:
                return False
    return True


def all_subspaces(n: int) -> tuple[int, ...]:
    """Masks of every linear subspace of F_2^n, sorted ascending."""
    size = 1 << n
    found = {1}  # the zero subspace
    frontier = [1]
    while frontier:
        nxt = []
        for sp in frontier:
            for v in range(1, size):
                if sp >> v & 1:
                    continue
                # sp is a subspace, so span(sp + {v}) = sp | (v ^ sp)
                shifted = 0
                rest = sp
                while rest:
                    low = rest & -rest
                    shifted |= 1 << ((low.bit_length() - 1) ^ v)
                    rest ^= low
                new = sp | shifted
                if new not in found:
                    found.add(new)
                    nxt.append(new)
        frontier = nxt
    return tuple(sorted(found))


def random_subspace_system(n: int, seed: int) -> SubsetSystem:
    """Assign, in a seeded random index order, a random linear subspace (or
    the empty set) to each A(x), choosing uniformly among assignments that
    keep the star condition valid against everything assigned so far.  The
    result always passes check_star and every nonempty part is a subspace.
    """
    if n > 5:
        raise ValueError("random subspace systems are a test-scale device (n <= 5)")
    rng = random.Random(seed)
    size = 1 << n
    subspaces = all_subspaces(n)
    pair_sums = {sp: restricted_sumset(sp) for sp in subspaces}

    masks = [0] * size
    assigned = [False] * size
    killed = [False] * size  # x killed => only the empty set is admissible
    order = list(range(size))
    rng.shuffle(order)
    for x in order:
        candidates = [0]
        if not killed[x]:
            for sp in subspaces:
                ok = True
                ps = pair_sums[sp]
                rest = ps
                while rest:
                    low = rest & -rest
                    y = x ^ (low.bit_length() - 1)
                    rest ^= low
                    if assigned[y] and masks[y]:
                        ok = False
                        break
                if ok:
                    candidates.append(sp)
        choice = rng.choice(candidates)
        masks[x] = choice
        assigned[x] = True
        if choice:
            rest = pair_sums[choice]
            while rest:
                low = rest & -rest
                killed[x ^ (low.bit_length() - 1)] = True
                rest ^= low

    sys = SubsetSystem(n=n, masks=tuple(masks))
    # defense in depth: re-check the finished system globally
    if check_star(sys) is not None:
        raise AssertionError("generator produced a star-violating system")
    for mask in sys.masks:
        if mask and not is_linear_subspace(mask, n):
            raise AssertionError("generator produced a non-subspace part")
    return sys


# -- capsys v1 I/O -----------------------------------------------------------


def _bits_str(x: int, n: int) -> str:
    return "".join("1" if x >> j & 1 else "0" for j in range(n))


def _parse_bits(s: str, n: int) -> int:
    if len(s) != n or any(c not in "01" for c in s):
        raise ValueError(f"bad {n}-bit string {s!r}")
    return sum(1 << j for j, c in enumerate(s) if c == "1")


def write_capsys(sys: SubsetSystem, fp: io.TextIOBase) -> None:
    fp.write(f"n={sys.n}\n")
    for x, mask in enumerate(sys.masks):
        if mask == 0:
            continue
        members = " ".join(_bits_str(q, sys.n) for q in sorted(_mask_elements(mask)))
        fp.write(f"{_bits_str(x, sys.n)}: {members}\n")


def save_capsys(sys: SubsetSystem, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fp:
        write_capsys(sys, fp)


def read_capsys(fp: io.TextIOBase) -> SubsetSystem:
    header = fp.readline().strip()
    if not header.startswith("n="):
        raise ValueError(f"not a capsys v1 file (header {header!r})")
    try:
        n = int(header.removeprefix("n="))
    except ValueError:
        raise ValueError(f"malformed dimension in header {header!r}") from None
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    masks = [0] * (1 << n)
    for lineno, raw in enumerate(fp, start=2):
        raw = raw.strip()
        if not raw:
            continue
        try:
            xpart, rest = raw.split(":", 1)
        except ValueError:
            raise ValueError(f"missing ':' on line {lineno}") from None
        x = _parse_bits(xpart.strip(), n)
        mask = 0
        for tok in rest.split():
            mask |= 1 << _parse_bits(tok, n)
        if mask == 0:
            raise ValueError(f"empty member list on line {lineno}")
        masks[x] = mask
    return SubsetSystem(n=n, masks=tuple(masks))


def load_capsys(path: str | os.PathLike) -> SubsetSystem:
    with open(path, "r", encoding="ascii") as fp:
        return read_capsys(fp)
