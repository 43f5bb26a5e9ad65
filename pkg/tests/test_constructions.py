import math
from fractions import Fraction

import pytest

from capkit import (
    BEST_KNOWN_TABLE,
    PAPER_TABLE,
    BinaryCode,
    ConstructionError,
    DigitSet,
    GroupParams,
    PointSet,
    alpha_estimate,
    behrend_shell,
    check_star,
    check_star_star,
    classify_digit_aps,
    coding_lower_bound,
    coding_system,
    equal_frequency_set,
    find_witness,
    komlos_set,
    komlos_system,
    materialize,
    mod11_k4,
    primepower_digits_A,
    primepower_digits_B,
    product,
    r4_system,
    salem_spencer_odd,
    shell_counts,
    theoretical_constants,
    total_size,
)
from capkit.constructions import digit_progressions, mod11_pattern_elimination, theorem_k

GOLDEN_BOUNDS = [2, 6, 16, 42, 124, 344, 960, 2832, 7880, 22232]


def test_coding_lower_bound_n5():
    b = coding_lower_bound(5)
    assert (b.t, b.terms, b.total) == (2, (80, 40, 4), 124)


def test_coding_lower_bound_table():
    for n, expected in enumerate(GOLDEN_BOUNDS, start=1):
        b = coding_lower_bound(n, PAPER_TABLE)
        assert b.total == expected
        if n >= 2:
            assert b.t == math.ceil((2 * n - 5) / 3)


def test_coding_lower_bound_best_known_n8():
    assert coding_lower_bound(8, BEST_KNOWN_TABLE).total == 2836


def test_coding_lower_bound_rejects_bad_n():
    with pytest.raises(ValueError):
        coding_lower_bound(0)


def test_coding_system_totals():
    assert total_size(coding_system(3, 3)) == 0
    assert total_size(coding_system(5, 2)) == 124
    assert total_size(coding_system(2, 0)) == 6


def test_coding_system_rejects_weak_codes():
    def bad_codegen(length, d):
        return BinaryCode(length, (0, 1), 1)  # distance 1 regardless of d

    with pytest.raises(ConstructionError):
        coding_system(4, 1, bad_codegen)


def test_coding_system_satisfies_star_condition():
    from capkit.cli import _default_t

    for n in range(2, 9):
        assert check_star(coding_system(n, _default_t(n))) is None


def test_materialized_coding_sets_match_bounds():
    # greedy lexicodes meet the tabulated sizes on every entry used up to n=8
    from capkit.cli import _default_t

    for n in range(1, 9):
        t = _default_t(n)
        s = materialize(coding_system(n, t))
        assert len(s) == coding_lower_bound(n, PAPER_TABLE).total


def test_coding_set_n5_is_free():
    s = materialize(coding_system(5, 2))
    assert len(s) == 124
    assert find_witness(s, 3) is None


def test_komlos_set_sizes_and_freeness():
    assert komlos_set(1).members == [0, 2]
    s3 = komlos_set(3)
    assert len(s3) == 12
    assert find_witness(s3, 3) is None
    s9 = komlos_set(9)
    assert len(s9) == math.comb(9, 3) * 2**6 == 5376
    assert find_witness(s9, 3) is None


def test_komlos_system_totals():
    assert total_size(komlos_system(3, 0)) == 1
    assert total_size(komlos_system(3, 2)) == 12
    assert total_size(komlos_system(5, 4)) == 80
    with pytest.raises(ValueError):
        komlos_system(3, 4)


def test_salem_spencer_sizes():
    s = salem_spencer_odd(5, 3)
    assert len(s) == 6
    assert find_witness(s, 3) is None
    assert len(salem_spencer_odd(5, 6)) == 90
    assert len(salem_spencer_odd(11, 6)) == 720


def test_salem_spencer_only_odd_m():
    with pytest.raises(ValueError):
        salem_spencer_odd(4, 3)
    with pytest.raises(ValueError):
        salem_spencer_odd(3, 3)


def test_salem_spencer_degenerates_below_alphabet_size():
    # fewer coordinates than digits: everything is padding
    s = salem_spencer_odd(5, 2)
    assert s.members == [0]


def test_salem_spencer_freeness_medium():
    s = salem_spencer_odd(5, 6)
    assert find_witness(s, 3) is None


def test_shell_counts_examples():
    assert shell_counts(5, 1) == {0: 1, 16: 2}
    counts = shell_counts(4, 8)
    assert max(counts.values()) == 1792
    assert sum(counts.values()) == 3**8
    assert sum(shell_counts(6, 4).values()) == 4**4


def test_behrend_shell_n1():
    s, spec = behrend_shell(4, 1)
    assert spec.r_prime == 16 and spec.count == 2
    assert s.members == [0, 2]


def test_behrend_shell_m6():
    s, spec = behrend_shell(6, 4)
    tc = theoretical_constants(6)
    floor = tc.c * 4**4 / math.sqrt(4)
    assert len(s) == spec.count >= floor
    assert find_witness(s, 3) is None


def test_behrend_shell_empty_radius_flagged():
    s, spec = behrend_shell(4, 1, r_prime=5)
    assert spec.count == 0 and len(s) == 0


def test_behrend_shell_odd_m():
    s, spec = behrend_shell(5, 4)
    assert len(s) == spec.count == shell_counts(5, 4)[spec.r_prime]
    assert find_witness(s, 3) is None


def test_mod11_sizes():
    assert len(mod11_k4(7)) == 5040
    with pytest.raises(ValueError):
        mod11_k4(6)


def test_mod11_padding_keeps_freeness():
    s = mod11_k4(8)
    assert len(s) == 5040
    assert find_witness(s, 4) is None


def test_mod11_pattern_elimination():
    cascade = mod11_pattern_elimination()
    assert len(cascade.patterns) == 12
    assert set(cascade.survivors) == {
        (0, 1, 2, 3), (1, 6, 0, 5), (3, 2, 1, 0), (5, 0, 6, 1)
    }
    assert set(cascade.eliminated_by_counting) == {(1, 2, 3, 4), (0, 2, 4, 6)}


def test_primepower_digits_a():
    d = primepower_digits_A(2, 2)
    assert d.digits == (0, 1, 2) and d.special == (1,)
    d = primepower_digits_A(2, 3)
    assert d.digits == tuple(range(7)) and d.special == (3,)
    assert len(primepower_digits_A(5, 3).digits) == 125 - 5 + 1 == 121
    assert theorem_k(primepower_digits_A(2, 3)) == 5
    with pytest.raises(ValueError):
        primepower_digits_A(4, 2)
    with pytest.raises(ValueError):
        primepower_digits_A(2, 1)


def test_primepower_digits_b():
    d = primepower_digits_B(3, 3)
    assert d.digits == (0, 1, 2, 4, 5, 7, 8, 13, 14, 16, 17, 22, 23, 25, 26)
    assert len(d.digits) == 27 - 2 * 9 + 6 == 15
    assert d.special == (0, 1, 2)
    assert len(primepower_digits_B(5, 3).digits) == 85
    assert theorem_k(d) == 4
    with pytest.raises(ValueError):
        primepower_digits_B(3, 2)


def test_equal_frequency_set():
    d = primepower_digits_A(2, 2)  # three digits over Z_4
    s = equal_frequency_set(d, 3)
    assert len(s) == math.factorial(3)
    assert find_witness(s, 3) is None
    with pytest.raises(ValueError):
        equal_frequency_set(d, 2)


def test_equal_frequency_matches_mod11_recipe():
    d = DigitSet(m=11, digits=tuple(range(7)), special=(), family="mod11")
    assert equal_frequency_set(d, 7) == mod11_k4(7)


def test_digit_progressions_mod4():
    d = primepower_digits_A(2, 2)
    terms = {t for _, _, t in digit_progressions(d.digits, 4, 3)}
    assert terms == {(0, 2, 0), (2, 0, 2), (0, 1, 2), (2, 1, 0)}


def test_classify_family_a_small():
    report = classify_digit_aps(primepower_digits_A(2, 2), 3)
    assert report.violations == ()
    assert report.class_counts == {"p-divisible-gap": 2, "p-coprime-gap": 2}
    report = classify_digit_aps(primepower_digits_A(2, 3), 5)
    assert report.violations == ()


def test_classify_family_b_small():
    report = classify_digit_aps(primepower_digits_B(3, 3), 4)
    assert report.violations == ()
    assert report.nonconstant_total == 64


def test_classify_rejects_other_families():
    d = DigitSet(m=11, digits=tuple(range(7)), special=(), family="mod11")
    with pytest.raises(ValueError):
        classify_digit_aps(d, 4)


def test_product():
    p = GroupParams(4, 1)
    s1 = PointSet(p, [0, 1])
    prod = product(s1, s1)
    assert prod.params == GroupParams(4, 2)
    assert len(prod) == 4
    assert find_witness(prod, 3) is None
    cubed = product(prod, s1)
    assert len(cubed) == 8
    with pytest.raises(ValueError):
        product(s1, PointSet(GroupParams(5, 1), [0]))


def test_product_of_coding_sets():
    s = materialize(coding_system(5, 2))
    big = product(s, s)
    assert big.params == GroupParams(4, 10)
    assert len(big) == 124 * 124 == 15376


def test_product_preserves_freeness_spot(rng):
    p = GroupParams(4, 2)
    for _ in range(8):
        while True:
            members = rng.sample(range(16), rng.randrange(1, 7))
            s = PointSet(p, members)
            if find_witness(s, 3) is None:
                break
        assert find_witness(product(s, s), 3) is None


def test_r4_system_totals_and_validity():
    expected = {1: 3, 2: 10, 3: 36, 4: 128}
    for n, total in expected.items():
        sys = r4_system(n)
        assert total_size(sys) == total
        assert check_star_star(sys) is None
        pts = materialize(sys)
        assert len(pts) == total
        assert find_witness(pts, 4) is None
    with pytest.raises(ValueError):
        r4_system(5)


def test_theoretical_constants():
    c5 = theoretical_constants(5)
    assert c5.sigma_squared == Fraction(2, 9)
    assert c5.sigma == pytest.approx(math.sqrt(2) / 3)
    c4 = theoretical_constants(4)
    assert c4.sigma_squared == Fraction(2, 9)
    c6 = theoretical_constants(6)
    assert c6.sigma == pytest.approx(1.0)
    assert c6.c == pytest.approx(0.19245, abs=1e-5)
    assert theoretical_constants(7).sigma == pytest.approx(1.0)
    assert theoretical_constants(8).sigma_squared == Fraction(14, 5)
    assert theoretical_constants(9).sigma_squared == Fraction(14, 5)
    for bad in (2, 3):
        with pytest.raises(ValueError):
            theoretical_constants(bad)


def test_alpha_estimate():
    assert alpha_estimate(1, 7) == 1.0
    assert alpha_estimate(124, 5) == pytest.approx(2.622, abs=1e-3)
    assert alpha_estimate(22232, 10) == pytest.approx(2.720, abs=1e-3)
    with pytest.raises(ValueError):
        alpha_estimate(0, 3)


def test_materialize_size_matches_total(rng):
    from capkit import SubsetSystem

    for _ in range(30):
        n = rng.choice([1, 2, 3])
        size = 1 << n
        masks = tuple(rng.randrange(1 << size) for _ in range(size))
        sys = SubsetSystem(n=n, masks=masks)
        assert len(materialize(sys)) == total_size(sys)


def test_materialization_cap_guards_huge_instances():
    # the 15-digit alphabet at n = 15 would need 15! points
    with pytest.raises(ValueError, match="cap"):
        equal_frequency_set(primepower_digits_B(3, 3), 15)
    with pytest.raises(ValueError, match="cap"):
        komlos_set(40)
