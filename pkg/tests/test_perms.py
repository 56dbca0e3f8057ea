import pytest

from recbench.enums.perms import (
    a215570_margin,
    a215570_successors,
    brute_a215570,
    brute_a269021,
    brute_adjacent_permutations,
    gen_a215570,
    gen_a269021,
    gen_adjacent_permutations,
    gen_young_monotone,
    young_growth_successors,
)
from recbench.enums.transfer import adjacent_permutation_system, tm_terms


def test_adjacent_m5_table():
    seq = gen_adjacent_permutations(5, 4)
    assert seq.offset == 0
    assert list(seq.terms) == [1, 2, 48, 2288, 135040]


def test_adjacent_m1_all_ones():
    assert list(gen_adjacent_permutations(1, 5).terms) == [1] * 6


def test_adjacent_m3_brute():
    got = list(gen_adjacent_permutations(3, 3).terms)
    assert got[1:] == [brute_adjacent_permutations(3, n) for n in range(1, 4)]


def test_adjacent_matches_transfer_matrix():
    got = list(gen_adjacent_permutations(5, 8).terms)
    assert got[1:] == list(tm_terms(adjacent_permutation_system(5), 8).terms)


def test_a215570_table():
    assert list(gen_a215570(3).terms) == [1, 35, 18720, 19369350]


def test_a215570_worked_expansion():
    # from remaining counts (3,2,0,1,4): margin 1, so 5 is excluded by
    # the cap and 3 by its zero count
    state = (3, 2, 0, 1, 4)
    assert a215570_margin(state) == 1
    assert a215570_successors(state) == [
        (1, (2, 2, 0, 1, 4)),
        (2, (3, 1, 0, 1, 4)),
        (4, (3, 2, 0, 0, 4)),
    ]


def test_a215570_brute():
    got = list(gen_a215570(2).terms)
    assert got[1:] == [brute_a215570(n) for n in (1, 2)]


def test_young_k4_table():
    assert list(gen_young_monotone(4, 5).terms) == [1, 1, 8, 169, 6392]


def test_young_k5_table():
    assert list(gen_young_monotone(5, 4).terms) == [1, 1, 16, 985]


def test_young_worked_rule_application():
    assert young_growth_successors((5, 3, 2, 0), 7) == [
        (6, 3, 2, 0),
        (5, 4, 2, 0),
        (5, 3, 2, 1),
    ]


def test_young_k_validation():
    with pytest.raises(ValueError):
        gen_young_monotone(7, 3)


def test_a269021_table():
    seq = gen_a269021(4)
    assert seq.offset == 0
    assert list(seq.terms) == [1, 2, 23, 588, 24553]


def test_a269021_brute():
    got = list(gen_a269021(3).terms)
    assert got[1:] == [brute_a269021(n) for n in (1, 2, 3)]
