from math import comb

import pytest

from recbench.exact import NonExactDivision
from recbench.enums.walks import (
    StepSet,
    _diagonal_generic,
    a172572_stepset,
    a172671_stepset,
    a265234_stepset,
    brute_orthant_n1,
    gen_a265234,
    gen_orthant_walks,
    gen_stepset_diagonal,
    sum_a172572,
    vandermonde_sum,
)
from hypothesis import given, strategies as st


@given(st.integers(0, 12), st.integers(0, 12), st.integers(-2, 24))
def test_vandermonde_sum_identity(m, n, r):
    assert vandermonde_sum(m, n, r) == (comb(m + n, r) if r >= 0 else 0)


def test_diagonal_cap_never_clips():
    # the per-coordinate exponent cap (the extraction target) drops only
    # monomials that can never return to the diagonal: a short run must
    # equal the prefix of a longer (looser-capped) one
    for s in (a265234_stepset(), StepSet(2, [(1, 0), (0, 1)], [1, 2])):
        divisor = 24 if s.dimension == 3 else 1
        spn = 1 if s.dimension == 3 else 2
        short = gen_stepset_diagonal(s, divisor, 3, steps_per_n=spn)
        long = gen_stepset_diagonal(s, divisor, 6, steps_per_n=spn)
        assert list(short.terms) == list(long.terms)[:3]
    short = gen_orthant_walks(a172572_stepset(), 3)
    long = gen_orthant_walks(a172572_stepset(), 5)
    assert list(short.terms) == list(long.terms)[:3]


def test_central_binomials():
    s = StepSet(2, [(1, 0), (0, 1)])
    seq = gen_stepset_diagonal(s, 1, 6, steps_per_n=2)
    assert list(seq.terms) == [comb(2 * n, n) for n in range(1, 7)]


def test_generic_path_weighted_asymmetric():
    # coeff of x^n y^n in (x + 2y)^(2n) = C(2n, n) * 2^n
    s = StepSet(2, [(1, 0), (0, 1)], [1, 2])
    assert not s.is_symmetric()
    seq = gen_stepset_diagonal(s, 1, 5, steps_per_n=2)
    assert list(seq.terms) == [comb(2 * n, n) * 2 ** n for n in range(1, 6)]


def test_symmetric_path_matches_generic():
    s = a265234_stepset()
    assert s.is_symmetric()
    fast = gen_stepset_diagonal(s, 24, 3)
    slow = _diagonal_generic(s, 24, 3, 1)
    assert list(fast.terms) == slow


def test_a265234_stepset_shape():
    s = a265234_stepset()
    assert sum(s.weights) == 108
    assert len(s.steps) == len(set(s.steps))
    assert all(sum(u) <= 4 for u in s.steps)
    # columns using one of each value: all 4! orderings avoid repeats
    w = dict(zip(s.steps, s.weights))
    assert w[(1, 1, 1)] == 24
    # columns from {0,1} alternate, so two of each: 0101 and 1010
    assert w[(2, 2, 0)] == 2


def test_a265234_terms():
    assert list(gen_a265234(4).terms) == [1, 43, 2592, 184740]


def test_orthant_a172572_terms():
    seq = gen_orthant_walks(a172572_stepset(), 3)
    assert list(seq.terms) == [90, 67950, 90291600]


def test_orthant_a172671_terms():
    seq = gen_orthant_walks(a172671_stepset(), 3)
    assert list(seq.terms) == [90, 202410, 747558000]


def test_orthant_n1_brute():
    assert brute_orthant_n1(a172572_stepset()) == 90
    assert brute_orthant_n1(a172671_stepset()) == 90


def test_a172572_sum_formula_matches_walks():
    terms = list(gen_orthant_walks(a172572_stepset(), 6).terms)
    assert terms == [sum_a172572(n) for n in range(1, 7)]


def test_stepset_validation():
    with pytest.raises(ValueError):
        StepSet(2, [(1, -1)])
    with pytest.raises(ValueError):
        StepSet(2, [(1, 0, 0)])
    with pytest.raises(ValueError):
        gen_orthant_walks(StepSet(6, [(1,) * 6]), 2)


def test_non_exact_divisor():
    s = StepSet(1, [(1,)])
    with pytest.raises(NonExactDivision):
        gen_stepset_diagonal(s, 2, 3)
