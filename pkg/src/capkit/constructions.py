"""Lower-bound constructions for progression-free sets in Z_m^n.

Families implemented here:

* coding bound and system: assign to each index vector of Hamming weight
  i > t a binary code of length i and distance i - t, embedded in its
  support.  Total size max_t sum_i binom(n, i) * C(i, i - t) over Z_4^n.
* fixed-ones sets over Z_4^n: exactly floor(n/3) coordinates equal 1, the
  rest 0 or 2; and the subset-system analogue (full subcube on supports
  of one fixed weight).
* equal-frequency digit sets: restrict coordinates to an alphabet D and
  demand every digit of D appear equally often; progression patterns in
  the digit alphabet then cancel column by column.  Covers the half-digit
  alphabets for odd and even m, the 4-progression alphabet {0..6} mod 11,
  and the prime-power digit alphabets below.
* shells: digit vectors at a fixed squared distance from the box centre;
  convexity (resp. the wrap-pattern analysis for even m) forbids 3-term
  progressions.  All shell arithmetic uses the scaled integer radius
  R' = 16 R, avoiding the rational centres (m-1)/4 and m/4.
* prime-power digit alphabets for m = p^s: variant A removes the digits
  i * p^{s-1} - 1 (i = 2..p) and guards progressions of length
  p^{s-1} + 1; variant B removes two structured digit classes and adds
  back {0..p-1}, guarding length p^{s-2} + 1.
* orthogonal-complement systems realizing the maximum 4-progression-free
  sizes 3, 10, 36, 128 over Z_4^n for n = 1..4.
* concatenation products, multiplying sizes while preserving freeness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .codes import PAPER_TABLE, BinaryCode, CodeTable, code_size, lexicode, min_distance
from .groups import GroupParams
from .pointset import PointSet
from .reformulation import SubsetSystem, materialize, system_from_set  # noqa: F401


class ConstructionError(RuntimeError):
    """A construction could not be carried out with the given ingredients."""


#: Constructions refuse to enumerate more points than this; very large
#: instances (the second prime-power family at m >= 27 needs n >= 15 and
#: ~1.3e12 points already) are covered by digit-level classification and
#: randomized falsification instead.
MATERIALIZE_CAP = 10_000_000


# ---------------------------------------------------------------------------
# coding bound


@dataclass(frozen=True)
class BoundBreakdown:
    """The coding lower bound at dimension n: best threshold t, the per-weight
    terms binom(n, i) * C(i, i - t) for i = t+1..n, and their total."""

    n: int
    table: str
    t: int
    terms: tuple[int, ...]
    total: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "table": self.table,
            "t": self.t,
            "terms": list(self.terms),
            "total": self.total,
        }


def coding_lower_bound(
    n: int, table: CodeTable = PAPER_TABLE, fallback_greedy: bool = True
) -> BoundBreakdown:
    """Evaluate max over t in [0, n] of sum_{i=t+1}^n binom(n,i) C(i, i-t);
    smallest maximizing t wins ties."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    best: BoundBreakdown | None = None
    for t in range(n + 1):
        terms = tuple(
            math.comb(n, i) * code_size(i, i - t, table, fallback_greedy)
            for i in range(t + 1, n + 1)
        )
        total = sum(terms)
        if best is None or total > best.total:
            best = BoundBreakdown(n=n, table=table.name, t=t, terms=terms, total=total)
    assert best is not None
    return best


def coding_system(
    n: int, t: int, codegen: Callable[[int, int], BinaryCode] = lexicode
) -> SubsetSystem:
    """Subset system over F_2^n: empty below Hamming weight t+1, else the
    codegen(i, i-t) codewords embedded into the support of the index.

    Embedding: codeword coordinate j goes to the j-th set bit of the index
    in ascending position order.  The result satisfies the star condition:
    two distinct embedded words differ in >= i-t support positions, so the
    index xor their sum has weight <= t and carries an empty set.
    """
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    codes: dict[int, tuple[int, ...]] = {}
    for i in range(t + 1, n + 1):
        code = codegen(i, i - t)
        if len(code) >= 2:
            d = min_distance(code)
            if d is None or d < i - t:
                raise ConstructionError(
                    f"code generator returned distance {d} < {i - t} at length {i}"
                )
        codes[i] = code.words
    masks = [0] * (1 << n)
    for x in range(1 << n):
        w = x.bit_count()
        if w <= t:
            continue
        positions = [j for j in range(n) if x >> j & 1]
        mask = 0
        for word in codes[w]:
            embedded = 0
            for j, pos in enumerate(positions):
                if word >> j & 1:
                    embedded |= 1 << pos
            mask |= 1 << embedded
        masks[x] = mask
    return SubsetSystem(n=n, masks=tuple(masks))


# ---------------------------------------------------------------------------
# fixed-ones constructions over Z_4^n


def komlos_set(n: int) -> PointSet:
    """All vectors of Z_4^n with exactly floor(n/3) coordinates equal to 1
    and the rest in {0, 2}.  Size binom(n, floor(n/3)) * 2^(n - floor(n/3));
    3-progression-free because the middle point of a proper 3-progression
    is unique and endpoint 1-entries cannot move."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    ones = n // 3
    size = math.comb(n, ones) << (n - ones)
    if size > MATERIALIZE_CAP:
        raise ValueError(
            f"fixed-ones set would have {size} points, beyond the "
            f"materialization cap of {MATERIALIZE_CAP}"
        )
    params = GroupParams(4, n)
    members = []
    rest = n - ones
    for pos in combinations(range(n), ones):
        posmask = set(pos)
        free_positions = [j for j in range(n) if j not in posmask]
        base = sum(1 << (2 * j) for j in pos)  # digit 1 at chosen coordinates
        for bits in range(1 << rest):
            idx = base
            for b, j in enumerate(free_positions):
                if bits >> b & 1:
                    idx += 2 << (2 * j)  # digit 2, else digit 0
            members.append(idx)
    return PointSet(params, members)


def komlos_system(n: int, r: int) -> SubsetSystem:
    """Subset system with A(x) the full subcube on the support of x when
    that support has size exactly r, else empty.  Total binom(n, r) * 2^r."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    masks = [0] * (1 << n)
    for x in range(1 << n):
        if x.bit_count() != r:
            continue
        mask = 0
        sub = x
        while True:
            mask |= 1 << sub
            if sub == 0:
                break
            sub = (sub - 1) & x
        masks[x] = mask
    return SubsetSystem(n=n, masks=tuple(masks))


# ---------------------------------------------------------------------------
# equal-frequency digit constructions


def _multinomial(total: int, parts: Sequence[int]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def _arrangements(counts: dict[int, int], length: int) -> Iterator[tuple[int, ...]]:
    """All distinct arrangements of the multiset given by counts."""
    digits = sorted(counts)
    out = [0] * length

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == length:
            yield tuple(out)
            return
        for d in digits:
            if counts[d]:
                counts[d] -= 1
                out[pos] = d
                yield from rec(pos + 1)
                counts[d] += 1

    yield from rec(0)


def _frequency_point_set(m: int, digits: Sequence[int], n: int) -> PointSet:
    """First q*floor(n/q) coordinates carry every allowed digit equally often
    (all arrangements); remaining coordinates are constant at the smallest
    digit.  Constant columns only ever contribute constant progressions."""
    q = len(digits)
    c = n // q
    block = q * c
    size = _multinomial(block, [c] * q)
    if size > MATERIALIZE_CAP:
        raise ValueError(
            f"equal-frequency set would have {size} points, beyond the "
            f"materialization cap of {MATERIALIZE_CAP}"
        )
    pad = (digits[0],) * (n - block)
    params = GroupParams(m, n)
    counts = {d: c for d in digits}
    members = (t + pad for t in _arrangements(counts, block))
    return PointSet.from_digit_tuples(params, members)


def salem_spencer_odd(m: int, n: int) -> PointSet:
    """Digits restricted to {0..(m-1)/2}, each appearing equally often on the
    first ((m+1)/2) * c coordinates (c = floor(n / ((m+1)/2))), zero padding.
    3-progression-free in Z_m^n for odd m >= 5: the restricted digits never
    wrap, and equal frequencies force the elimination of every nonconstant
    column pattern, smallest digit first."""
    if m % 2 == 0 or m < 5:
        raise ValueError(f"modulus must be odd and >= 5, got {m}")
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return _frequency_point_set(m, range((m + 1) // 2), n)


def mod11_k4(n: int) -> PointSet:
    """Digits {0..6} mod 11, each appearing floor(n/7) times on the first
    7 * floor(n/7) coordinates, zero padding.  Free of proper 4-term
    progressions; see mod11_pattern_elimination for the digit-level
    counting argument."""
    if n < 7:
        raise ValueError(f"need n >= 7, got {n}")
    return _frequency_point_set(11, range(7), n)


def equal_frequency_set(d: "DigitSet", n: int) -> PointSet:
    """Equal-frequency set over an arbitrary digit alphabet; padding uses
    the smallest allowed digit."""
    if n < len(d.digits):
        raise ValueError(f"need n >= |D| = {len(d.digits)}, got {n}")
    return _frequency_point_set(d.m, d.digits, n)


# ---------------------------------------------------------------------------
# shells


@dataclass(frozen=True)
class ShellSpec:
    """A shell of digit vectors at scaled squared radius R' from the box
    centre; R' uses integer weights (4a - (m-1))^2 for odd m and (4a - m)^2
    for even m, i.e. R' = 16 R."""

    m: int
    n: int
    center_numerator: int  # centre is center_numerator / 4 per coordinate
    r_prime: int
    count: int


def _shell_weights(m: int) -> list[int]:
    if m < 4:
        raise ValueError(f"modulus must be >= 4, got {m}")
    if m % 2:
        return [(4 * a - (m - 1)) ** 2 for a in range((m + 1) // 2)]
    return [(4 * a - m) ** 2 for a in range(m // 2 + 1)]


def shell_counts(m: int, n: int) -> dict[int, int]:
    """Exact count of digit vectors per scaled squared radius R', by
    convolving the per-coordinate weight multiset n times."""
    weights = _shell_weights(m)
    counts = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for r, c in counts.items():
            for w in weights:
                key = r + w
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return counts


def behrend_shell(m: int, n: int, r_prime: int | None = None) -> tuple[PointSet, ShellSpec]:
    """Enumerate the digit vectors on one shell.  With r_prime omitted, the
    count-maximizing radius is chosen (smallest R' on ties).  The resulting
    set is 3-progression-free in Z_m^n; a requested radius with zero count
    yields an empty set, flagged by count=0 in the spec."""
    weights = _shell_weights(m)
    digits = list(range(len(weights)))
    # suffix table: tails[L][r] = number of ways to reach total r with L coordinates
    tails: list[dict[int, int]] = [{0: 1}]
    for _ in range(n):
        prev = tails[-1]
        nxt: dict[int, int] = {}
        for r, c in prev.items():
            for w in weights:
                nxt[r + w] = nxt.get(r + w, 0) + c
        tails.append(nxt)
    full = tails[n]
    if r_prime is None:
        best_count = max(full.values())
        r_prime = min(r for r, c in full.items() if c == best_count)
    count = full.get(r_prime, 0)
    if count > MATERIALIZE_CAP:
        raise ValueError(
            f"shell holds {count} points, beyond the materialization cap "
            f"of {MATERIALIZE_CAP}"
        )
    center_num = m - 1 if m % 2 else m

    params = GroupParams(m, n)
    out: list[tuple[int, ...]] = []
    vec = [0] * n

    def rec(pos: int, remaining: int) -> None:
        if pos == n:
            out.append(tuple(vec))
            return
        tail = tails[n - pos - 1]
        for d in digits:
            rest = remaining - weights[d]
            if rest >= 0 and tail.get(rest):
                vec[pos] = d
                rec(pos + 1, rest)

    if count:
        rec(0, r_prime)
    spec = ShellSpec(m=m, n=n, center_numerator=center_num, r_prime=r_prime, count=count)
    assert len(out) == count
    return PointSet.from_digit_tuples(params, out), spec


# ---------------------------------------------------------------------------
# prime-power digit alphabets


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class DigitSet:
    """An allowed digit alphabet D inside Z_m, with marked special digits
    and the family tag describing which construction produced it."""

    m: int
    digits: tuple[int, ...]
    special: tuple[int, ...]
    family: str  # salem-odd | salem-even | mod11 | prime-power-a | prime-power-b
    p: int | None = None
    s: int | None = None

    def __post_init__(self) -> None:
        if any(not 0 <= d < self.m for d in self.digits):
            raise ValueError("digit out of range")
        if len(set(self.digits)) != len(self.digits):
            raise ValueError("digits must be distinct")
        if tuple(sorted(self.digits)) != self.digits:
            raise ValueError("digits must be sorted")
        if not set(self.special) <= set(self.digits):
            raise ValueError("special digits must be allowed digits")


def primepower_digits_A(p: int, s: int) -> DigitSet:
    """For m = p^s (s >= 2): remove the digits i * p^{s-1} - 1 for i = 2..p,
    leaving |D| = p^s - p + 1 digits; the surviving representative
    p^{s-1} - 1 of the class -1 mod p^{s-1} is the marked special digit.
    Guards progressions of length p^{s-1} + 1."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    m = p**s
    removed = {i * p ** (s - 1) - 1 for i in range(2, p + 1)}
    digits = tuple(sorted(set(range(m)) - removed))
    return DigitSet(
        m=m, digits=digits, special=(p ** (s - 1) - 1,), family="prime-power-a", p=p, s=s
    )


def primepower_digits_B(p: int, s: int) -> DigitSet:
    """For m = p^s (s >= 3): remove the multiples of p^{s-2} and the digits
    p^{s-1} i + j (0 <= i < p, 1 <= j < p), then add back {0..p-1}; this
    leaves |D| = p^s - 2p^2 + 2p digits with D3 = {0..p-1} marked special.
    Guards progressions of length p^{s-2} + 1."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    m = p**s
    d1 = {p ** (s - 2) * i for i in range(p * p)}
    d2 = {p ** (s - 1) * i + j for i in range(p) for j in range(1, p)}
    d3 = tuple(range(p))
    digits = tuple(sorted((set(range(m)) - (d1 | d2)) | set(d3)))
    return DigitSet(m=m, digits=digits, special=d3, family="prime-power-b", p=p, s=s)


def theorem_k(d: DigitSet) -> int:
    """The progression length the alphabet is designed to exclude."""
    if d.family == "prime-power-a":
        return d.p ** (d.s - 1) + 1
    if d.family == "prime-power-b":
        return d.p ** (d.s - 2) + 1
    raise ValueError(f"no designated progression length for family {d.family!r}")


# ---------------------------------------------------------------------------
# digit-level progression classification


def digit_progressions(
    digits: Sequence[int], m: int, k: int, include_constant: bool = False
) -> list[tuple[int, int, tuple[int, ...]]]:
    """All (start, gap, terms) with gap in [1, m-1], start in D and every
    term of the k-progression in D.  Constant progressions (those whose
    terms collapse to one value) are skipped unless requested."""
    dset = set(digits)
    out = []
    for a in sorted(dset):
        for g in range(1, m):
            terms = tuple((a + j * g) % m for j in range(k))
            if not all(t in dset for t in terms):
                continue
            if len(set(terms)) == 1 and not include_constant:
                continue
            out.append((a, g, terms))
    return out


@dataclass(frozen=True)
class DigitViolation:
    start: int
    gap: int
    terms: tuple[int, ...]
    reason: str


@dataclass(frozen=True)
class DigitReport:
    family: str
    m: int
    k: int
    class_counts: dict[str, int]
    violations: tuple[DigitViolation, ...]

    @property
    def nonconstant_total(self) -> int:
        return sum(self.class_counts.values())


def _p_valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def classify_digit_aps(d: DigitSet, k: int) -> DigitReport:
    """Enumerate every in-alphabet k-progression and assert the structural
    facts that make the equal-frequency set progression-free.

    prime-power-a: a nonconstant progression with gap divisible by p closes
    up (first term = last term) and never touches the special digit; with
    gap coprime to p it contains the special digit, and only at interior
    positions.

    prime-power-b: gap valuation >= 2 closes up and avoids D3 entirely;
    valuation exactly 1 avoids 0, uses exactly one digit of D3 - {0}, and
    only at an interior position; valuation 0 contains the digit 0 exactly
    once, at an interior position.  Consequently a nonconstant progression
    can only start inside D3 by containing 0 at an interior position.

    Violations are collected and reported, never raised.
    """
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    if d.family not in ("prime-power-a", "prime-power-b"):
        raise ValueError(f"classification is defined for prime-power families, not {d.family!r}")
    p = d.p
    assert p is not None
    violations: list[DigitViolation] = []
    counts: dict[str, int] = {}

    def bad(a: int, g: int, terms: tuple[int, ...], reason: str) -> None:
        violations.append(DigitViolation(start=a, gap=g, terms=terms, reason=reason))

    if d.family == "prime-power-a":
        special = d.special[0]
        counts = {"p-divisible-gap": 0, "p-coprime-gap": 0}
        for a, g, terms in digit_progressions(d.digits, d.m, k):
            if g % p == 0:
                counts["p-divisible-gap"] += 1
                if terms[0] != terms[-1]:
                    bad(a, g, terms, "p-divisible gap but endpoints differ")
                if special in terms:
                    bad(a, g, terms, "p-divisible gap touches the special digit")
            else:
                counts["p-coprime-gap"] += 1
                if special not in terms:
                    bad(a, g, terms, "p-coprime gap misses the special digit")
                if terms[0] == special or terms[-1] == special:
                    bad(a, g, terms, "special digit at a boundary position")
    else:
        d3 = set(d.special)
        counts = {"gap-valuation-ge-2": 0, "gap-valuation-1": 0, "gap-valuation-0": 0}
        for a, g, terms in digit_progressions(d.digits, d.m, k):
            v = _p_valuation(g, p)
            if v >= 2:
                counts["gap-valuation-ge-2"] += 1
                if terms[0] != terms[-1]:
                    bad(a, g, terms, "gap valuation >= 2 but endpoints differ")
                if set(terms) & d3:
                    bad(a, g, terms, "gap valuation >= 2 touches D3")
            elif v == 1:
                counts["gap-valuation-1"] += 1
                if 0 in terms:
                    bad(a, g, terms, "gap valuation 1 contains 0")
                hits = [t for t in terms if t in d3]
                if len(hits) != 1:
                    bad(a, g, terms, f"expected exactly one D3 digit, found {len(hits)}")
                if terms[0] in d3 or terms[-1] in d3:
                    bad(a, g, terms, "D3 digit at a boundary position")
            else:
                counts["gap-valuation-0"] += 1
                if terms.count(0) != 1:
                    bad(a, g, terms, f"expected exactly one 0, found {terms.count(0)}")
                if terms[0] == 0 or terms[-1] == 0:
                    bad(a, g, terms, "digit 0 at a boundary position")
    return DigitReport(
        family=d.family, m=d.m, k=k, class_counts=counts, violations=tuple(violations)
    )


@dataclass(frozen=True)
class Mod11Cascade:
    """Transcript of the counting elimination over the 4-progression digit
    patterns of the alphabet {0..6} mod 11."""

    patterns: tuple[tuple[int, ...], ...]
    eliminated_by_counting: tuple[tuple[int, ...], ...]
    eliminated_by_missing_position: tuple[tuple[int, ...], ...]
    survivors: tuple[tuple[int, ...], ...]


def mod11_pattern_elimination() -> Mod11Cascade:
    """Reproduce the hand elimination over the mod-11 digit patterns.

    Every point of an equal-frequency set carries each digit equally often,
    so for each digit the column-pattern multiplicities must agree across
    positions.  Two such identities (digit 0 at positions 2 vs 0, digit 1
    at positions 1 vs 0) force the multiplicities of (1,2,3,4) and
    (0,2,4,6) to zero; digit 4 then occurs at the last position of no
    remaining pattern, which zeroes every pattern containing 4.  The four
    survivors have 2 and 6 only at interior positions and 3 and 5 only at
    the boundary, which kills them by the same counting, one digit at a
    time."""
    pats = [terms for _, _, terms in digit_progressions(range(7), 11, 4)]
    expected = {
        (0, 1, 2, 3), (0, 2, 4, 6), (1, 2, 3, 4), (1, 6, 0, 5),
        (2, 3, 4, 5), (3, 4, 5, 6), (3, 2, 1, 0), (4, 3, 2, 1),
        (5, 0, 6, 1), (5, 4, 3, 2), (6, 4, 2, 0), (6, 5, 4, 3),
    }
    if set(pats) != expected:
        raise ConstructionError("mod-11 pattern enumeration changed")

    def having(digit: int, pos: int, pool: Sequence[tuple[int, ...]]) -> set:
        return {q for q in pool if q[pos] == digit}

    # digit 0, positions 2 vs 0: mult(1605) = mult(0123) + mult(0246)
    # digit 1, positions 1 vs 0: mult(0123) = mult(1234) + mult(1605)
    if having(0, 2, pats) != {(1, 6, 0, 5)} or having(0, 0, pats) != {(0, 1, 2, 3), (0, 2, 4, 6)}:
        raise ConstructionError("digit-0 identity does not have the expected shape")
    if having(1, 1, pats) != {(0, 1, 2, 3)} or having(1, 0, pats) != {(1, 2, 3, 4), (1, 6, 0, 5)}:
        raise ConstructionError("digit-1 identity does not have the expected shape")
    # substituting gives mult(1234) + mult(0246) = 0, so both vanish
    counted_out = ((1, 2, 3, 4), (0, 2, 4, 6))
    pool = [q for q in pats if q not in counted_out]

    # digit 4 no longer occurs at the last position
    if having(4, 3, pool):
        raise ConstructionError("digit 4 unexpectedly still occurs at the last position")
    position_out = tuple(q for q in pool if 4 in q)
    survivors = tuple(q for q in pool if 4 not in q)
    if set(survivors) != {(0, 1, 2, 3), (1, 6, 0, 5), (3, 2, 1, 0), (5, 0, 6, 1)}:
        raise ConstructionError("cascade survivors changed")
    for dgt in (2, 6):
        if any(q[0] == dgt or q[3] == dgt for q in survivors):
            raise ConstructionError(f"digit {dgt} at a boundary position among survivors")
    for dgt in (3, 5):
        if any(q[1] == dgt or q[2] == dgt for q in survivors):
            raise ConstructionError(f"digit {dgt} at an interior position among survivors")
    return Mod11Cascade(
        patterns=tuple(pats),
        eliminated_by_counting=counted_out,
        eliminated_by_missing_position=position_out,
        survivors=survivors,
    )


# ---------------------------------------------------------------------------
# products, orthogonal-complement systems, constants


def product(s1: PointSet, s2: PointSet) -> PointSet:
    """Concatenation product in Z_m^{n1+n2}; preserves k-progression
    freeness and multiplies sizes."""
    if s1.params.m != s2.params.m:
        raise ValueError(f"modulus mismatch: {s1.params.m} vs {s2.params.m}")
    m = s1.params.m
    n1 = s1.params.n
    shift = m**n1
    params = GroupParams(m, n1 + s2.params.n)
    members = [i1 + i2 * shift for i2 in s2.members for i1 in s1.members]
    return PointSet(params, members)


def _dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


#: Bijections phi on the nonzero vectors with x.phi(x) = 1 and
#: x.phi(y) + y.phi(x) = 1 for distinct nonzero x, y (little-endian bit
#: encoding, e1 = 1).  These make the orthogonal-complement systems below
#: satisfy the star-star condition.
_PHI2 = {1: 1, 2: 3, 3: 2}
_PHI3 = {1: 1, 2: 3, 4: 7, 3: 6, 5: 4, 6: 5, 7: 2}


def r4_system(n: int) -> SubsetSystem:
    """The maximum 4-progression-free subset systems over F_2^n, n = 1..4,
    with totals 3, 10, 36, 128.

    n = 1: A(0) = F_2, A(1) = {0}.  n = 2, 3: A(0) is everything and
    A(x) is the hyperplane orthogonal to phi(x).  n = 4: extend the n = 3
    map by phi(0) = 0 and set A(x) = A(x + e4) = (phi(x) + e4)-perp on the
    embedded F_2^3, giving sixteen 8-element sets."""
    if n not in (1, 2, 3, 4):
        raise ValueError(f"systems are defined for n in 1..4, got {n}")
    size = 1 << n
    masks = [0] * size
    if n == 1:
        masks[0] = 0b11
        masks[1] = 0b01
    elif n in (2, 3):
        phi = _PHI2 if n == 2 else _PHI3
        masks[0] = (1 << size) - 1
        for x in range(1, size):
            masks[x] = sum(1 << z for z in range(size) if _dot(z, phi[x]) == 0)
    else:
        phi = dict(_PHI3)
        phi[0] = 0
        e4 = 8
        for x in range(8):
            mask = sum(1 << z for z in range(16) if _dot(z, phi[x] ^ e4) == 0)
            masks[x] = mask
            masks[x ^ e4] = mask
    return SubsetSystem(n=n, masks=tuple(masks))


@dataclass(frozen=True)
class TheoreticalConstants:
    """The per-modulus constants in the shell-size guarantee
    |shell| >= C_m * (half-box size) / sqrt(n): sigma_m is the standard
    deviation of one coordinate's squared distance to the centre, and
    C_m = 1 / (3 * sqrt(3) * sigma_m)."""

    m: int
    parity: str
    sigma_squared: Fraction
    sigma: float
    c: float


def theoretical_constants(m: int) -> TheoreticalConstants:
    if m % 2 == 0:
        if m < 4:
            raise ValueError(f"even modulus must be >= 4, got {m}")
        sig2 = Fraction(m**4 + 8 * m**3 + 4 * m**2 - 48 * m, 2880)
        parity = "even"
    else:
        if m < 5:
            raise ValueError(f"odd modulus must be >= 5, got {m}")
        sig2 = Fraction(m**4 + 4 * m**3 - 14 * m**2 - 36 * m + 45, 2880)
        parity = "odd"
    sigma = math.sqrt(sig2)
    c = 1.0 / (3.0 * math.sqrt(3.0) * sigma)
    return TheoreticalConstants(m=m, parity=parity, sigma_squared=sig2, sigma=sigma, c=c)


def alpha_estimate(size: int, n: int) -> float:
    """The n-th root of a set size: the growth-rate report value."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return size ** (1.0 / n)
