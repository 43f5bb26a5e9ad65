"""Finite subsets of Z_m^n and the "capset v1" text format.

A PointSet keeps its members as a strictly increasing list of encoded
indices, plus a dense bitset when the ambient group is small enough for
one.  The bitset and the list always agree.

capset v1 format::

    capset v1
    m=<m> n=<n>
    <digit_0> <digit_1> ... <digit_{n-1}>      (one vector per line,
    ...                                         sorted by encoded index)
"""

from __future__ import annotations

import io
import os
from typing import Iterable, Iterator

from .groups import GroupParams, GroupVec, decode, decode_digits, encode, encode_digits

#: Above this group cardinality no dense bitset is materialized and
#: membership falls back to a hash set over encoded indices.
DENSE_BITSET_CAP = 1 << 28


class PointSet:
    """A finite subset of Z_m^n with list, bitset and hash-set views."""

    __slots__ = ("params", "members", "bitset", "_member_set")

    def __init__(self, params: GroupParams, members: Iterable[int]):
        self.params = params
        card = params.cardinality
        seen = sorted(set(members))
        if seen and (seen[0] < 0 or seen[-1] >= card):
            bad = seen[0] if seen[0] < 0 else seen[-1]
            raise ValueError(f"member index {bad} out of range [0, {card})")
        self.members: list[int] = seen
        self._member_set = frozenset(seen)
        if card <= DENSE_BITSET_CAP:
            buf = bytearray((card + 7) >> 3)
            for i in seen:
                buf[i >> 3] |= 1 << (i & 7)
            self.bitset: bytearray | None = buf
        else:
            self.bitset = None

    @classmethod
    def from_vectors(cls, params: GroupParams, vectors: Iterable[GroupVec]) -> "PointSet":
        return cls(params, (encode(v, params) for v in vectors))

    @classmethod
    def from_digit_tuples(cls, params: GroupParams, tuples: Iterable[tuple[int, ...]]) -> "PointSet":
        m = params.m
        return cls(params, (encode_digits(t, m) for t in tuples))

    @property
    def member_set(self) -> frozenset[int]:
        return self._member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self._member_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.params == other.params and self.members == other.members

    def __repr__(self) -> str:
        p = self.params
        return f"PointSet(Z_{p.m}^{p.n}, {len(self.members)} points)"

    def vectors(self) -> Iterator[GroupVec]:
        for i in self.members:
            yield decode(i, self.params)

    def digit_tuples(self) -> Iterator[tuple[int, ...]]:
        m, n = self.params.m, self.params.n
        for i in self.members:
            yield decode_digits(i, m, n)

    def translate(self, c: GroupVec) -> "PointSet":
        m = self.params.m
        cd = c.digits
        out = []
        for t in self.digit_tuples():
            out.append(encode_digits(tuple((x + y) % m for x, y in zip(t, cd)), m))
        return PointSet(self.params, out)

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self.params, indices)

    # -- capset v1 I/O ----------------------------------------------------

    def write(self, fp: io.TextIOBase) -> None:
        p = self.params
        fp.write("capset v1\n")
        fp.write(f"m={p.m} n={p.n}\n")
        for t in self.digit_tuples():
            fp.write(" ".join(map(str, t)) + "\n")

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fp:
            self.write(fp)


def read_capset(fp: io.TextIOBase) -> PointSet:
    header = fp.readline().strip()
    if header != "capset v1":
        raise ValueError(f"not a capset v1 file (header {header!r})")
    line = fp.readline().strip()
    try:
        mpart, npart = line.split()
        m = int(mpart.removeprefix("m="))
        n = int(npart.removeprefix("n="))
        if not (mpart.startswith("m=") and npart.startswith("n=")):
            raise ValueError
    except ValueError:
        raise ValueError(f"malformed capset parameter line {line!r}") from None
    params = GroupParams(m, n)
    members = []
    for lineno, raw in enumerate(fp, start=3):
        raw = raw.strip()
        if not raw:
            continue
        digits = tuple(int(x) for x in raw.split())
        if len(digits) != n or any(not 0 <= d < m for d in digits):
            raise ValueError(f"invalid vector on line {lineno}: {raw!r}")
        members.append(encode_digits(digits, m))
    return PointSet(params, members)


def load_capset(path: str | os.PathLike) -> PointSet:
    with open(path, "r", encoding="ascii") as fp:
        return read_capset(fp)
