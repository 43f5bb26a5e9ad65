import pytest

from capkit import (
    GroupParams,
    PointSet,
    SearchConfig,
    find_witness,
    greedy_lower,
    max_apfree,
)
from conftest import naive_max_size


def test_greedy_z4_line():
    s = greedy_lower(GroupParams(4, 1), 3)
    assert s.members == [0, 1]


def test_greedy_z3_line():
    s = greedy_lower(GroupParams(3, 1), 3)
    assert s.members == [0, 1]


@pytest.mark.parametrize("m,n,k", [(4, 1, 3), (4, 2, 3), (3, 2, 3), (4, 2, 4), (5, 1, 4)])
def test_greedy_output_is_always_free(m, n, k):
    s = greedy_lower(GroupParams(m, n), k)
    assert find_witness(s, k) is None


def test_exact_values_z4():
    assert max_apfree(GroupParams(4, 1), 3).size == 2
    assert max_apfree(GroupParams(4, 2), 3).size == 6
    assert max_apfree(GroupParams(4, 1), 4).size == 3
    assert max_apfree(GroupParams(4, 2), 4).size == 10


def test_results_are_certified_and_sound():
    r = max_apfree(GroupParams(4, 2), 3)
    assert r.optimal
    assert len(r.best) == r.size
    assert find_witness(r.best, 3) is None


@pytest.mark.parametrize(
    "m,n,k",
    [(2, 2, 3), (2, 3, 3), (3, 1, 3), (3, 2, 3), (4, 1, 3), (4, 2, 3),
     (5, 1, 3), (7, 1, 3), (4, 1, 4), (3, 2, 4), (4, 2, 4)],
)
def test_matches_naive_enumeration(m, n, k):
    p = GroupParams(m, n)
    assert p.cardinality <= 16
    r = max_apfree(p, k)
    assert r.optimal
    assert r.size == naive_max_size(p, k)


def test_no_proper_three_progressions_mod_two():
    # in Z_2^n a nonzero difference repeats after two steps, so everything is free
    r = max_apfree(GroupParams(2, 3), 3)
    assert r.size == 8 and r.optimal


@pytest.mark.parametrize("m,n", [(4, 2), (3, 3), (2, 6), (8, 1), (4, 3)])
def test_assume_zero_does_not_change_the_optimum(m, n):
    p = GroupParams(m, n)
    with_zero = max_apfree(p, 3, SearchConfig(assume_zero=True))
    without = max_apfree(p, 3, SearchConfig(assume_zero=False))
    assert with_zero.size == without.size
    assert with_zero.optimal and without.optimal


def test_monotone_in_dimension():
    sizes = [max_apfree(GroupParams(4, n), 3).size for n in (1, 2, 3)]
    assert sizes == sorted(sizes) == [2, 6, 16]
    sizes4 = [max_apfree(GroupParams(4, n), 4).size for n in (1, 2)]
    assert sizes4 == [3, 10]


def test_budget_exhaustion_is_flagged_not_raised():
    r = max_apfree(GroupParams(4, 3), 3, SearchConfig(time_budget=1e-4))
    assert not r.optimal
    assert find_witness(r.best, 3) is None  # still sound


def test_warm_start():
    p = GroupParams(4, 2)
    opt = max_apfree(p, 3)
    warm = max_apfree(p, 3, SearchConfig(initial=opt.best))
    assert warm.size == 6 and warm.optimal
    with pytest.raises(ValueError):
        max_apfree(p, 3, SearchConfig(initial=PointSet(GroupParams(4, 3), [0])))


def test_parallel_matches_sequential():
    p = GroupParams(4, 2)
    seq = max_apfree(p, 3)
    par = max_apfree(p, 3, SearchConfig(parallel=True))
    assert par.size == seq.size and par.optimal
    par4 = max_apfree(p, 4, SearchConfig(parallel=False))
    assert par4.size == 10


def test_deterministic_node_counts():
    a = max_apfree(GroupParams(4, 2), 3)
    b = max_apfree(GroupParams(4, 2), 3)
    assert a.nodes == b.nodes == 165
    assert a.best == b.best


def test_rejects_oversized_groups():
    with pytest.raises(ValueError):
        max_apfree(GroupParams(4, 5), 3)
    with pytest.raises(ValueError):
        max_apfree(GroupParams(4, 2), 2)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(time_budget=0)


def test_known_ternary_cap_set_values():
    # published maxima for Z_3^n, an independent cross-check of the searcher
    assert max_apfree(GroupParams(3, 1), 3).size == 2
    assert max_apfree(GroupParams(3, 2), 3).size == 4
    r = max_apfree(GroupParams(3, 3), 3)
    assert r.size == 9 and r.optimal
