"""Vectors and arithmetic in the abelian group Z_m^n.

A point of Z_m^n is a length-n tuple of digits in [0, m).  Points are
identified with integers in [0, m^n) through little-endian mixed-radix
encoding (digit 0 is least significant), which fixes file ordering and
witness reporting once and for all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

#: Dense (index-addressed) representations are only permitted below this
#: cardinality; larger groups must go through vector/hash representations.
DENSE_INDEX_CAP = 1 << 31


@dataclass(frozen=True)
class GroupParams:
    """The group Z_m^n: modulus m >= 2 and dimension n >= 1."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")

    @property
    def cardinality(self) -> int:
        return self.m**self.n

    @property
    def dense_ok(self) -> bool:
        return self.cardinality <= DENSE_INDEX_CAP


@dataclass(frozen=True)
class GroupVec:
    """An immutable element of Z_m^n, stored as its digit tuple."""

    digits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)


def vec(*digits: int) -> GroupVec:
    return GroupVec(tuple(digits))


def validate_vec(v: GroupVec, p: GroupParams) -> None:
    if len(v.digits) != p.n:
        raise ValueError(f"expected {p.n} digits, got {len(v.digits)}")
    for d in v.digits:
        if not 0 <= d < p.m:
            raise ValueError(f"digit {d} out of range [0, {p.m})")


def encode(v: GroupVec, p: GroupParams) -> int:
    """Little-endian mixed-radix index of v: sum of digits[j] * m**j."""
    validate_vec(v, p)
    return encode_digits(v.digits, p.m)


def encode_digits(digits: Sequence[int], m: int) -> int:
    idx = 0
    for d in reversed(digits):
        idx = idx * m + d
    return idx


def decode(index: int, p: GroupParams) -> GroupVec:
    if not 0 <= index < p.cardinality:
        raise ValueError(f"index {index} out of range [0, {p.cardinality})")
    return GroupVec(decode_digits(index, p.m, p.n))


def decode_digits(index: int, m: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        index, d = divmod(index, m)
        out.append(d)
    return tuple(out)


def vadd(a: GroupVec, b: GroupVec, p: GroupParams) -> GroupVec:
    return GroupVec(tuple((x + y) % p.m for x, y in zip(a.digits, b.digits)))


def vsub(a: GroupVec, b: GroupVec, p: GroupParams) -> GroupVec:
    return GroupVec(tuple((x - y) % p.m for x, y in zip(a.digits, b.digits)))


def vneg(a: GroupVec, p: GroupParams) -> GroupVec:
    return GroupVec(tuple((-x) % p.m for x in a.digits))


def is_zero(a: GroupVec) -> bool:
    return all(d == 0 for d in a.digits)


def ap_terms(start: GroupVec, diff: GroupVec, k: int, p: GroupParams) -> tuple[GroupVec, ...]:
    """The k terms start, start+diff, ..., start+(k-1)*diff, reduced mod m."""
    if k < 1:
        raise ValueError(f"progression length must be >= 1, got {k}")
    validate_vec(start, p)
    validate_vec(diff, p)
    terms = [start]
    cur = start
    for _ in range(k - 1):
        cur = vadd(cur, diff, p)
        terms.append(cur)
    return tuple(terms)


def is_proper(terms: Sequence[GroupVec]) -> bool:
    """True iff all terms are pairwise distinct."""
    if not terms:
        raise ValueError("empty term sequence")
    n = len(terms[0])
    if any(len(t) != n for t in terms):
        raise ValueError("terms of unequal length")
    return len({t.digits for t in terms}) == len(terms)


@dataclass(frozen=True)
class ApWitness:
    """A proper k-term arithmetic progression, given by start and difference."""

    start: GroupVec
    diff: GroupVec
    k: int
    terms: tuple[GroupVec, ...]

    def as_dict(self, p: GroupParams) -> dict:
        return {
            "k": self.k,
            "start": list(self.start.digits),
            "diff": list(self.diff.digits),
            "terms": [list(t.digits) for t in self.terms],
            "indices": [encode(t, p) for t in self.terms],
        }


def make_witness(start: GroupVec, diff: GroupVec, k: int, p: GroupParams) -> ApWitness:
    """Build an ApWitness, checking that the progression is proper."""
    if is_zero(diff):
        raise ValueError("witness difference must be nonzero")
    terms = ap_terms(start, diff, k, p)
    if not is_proper(terms):
        raise ValueError("progression terms are not pairwise distinct")
    return ApWitness(start=start, diff=diff, k=k, terms=terms)


def all_vectors(p: GroupParams) -> Iterable[GroupVec]:
    """All m^n group elements in encoded-index order (dense groups only)."""
    if not p.dense_ok:
        raise ValueError("group too large for dense enumeration")
    for i in range(p.cardinality):
        yield decode(i, p)
