import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from recbench.exact import (
    MultiPoly,
    RatMat,
    UniPoly,
    mpoly_mul,
    nullspace,
    nullspace_bareiss,
    poly_gcd,
    rational_reconstruct,
)


# ---------------------------------------------------------------------------
# UniPoly


def test_unipoly_basics():
    p = UniPoly([1, 2, 3])  # 1 + 2n + 3n^2
    assert p.degree == 2
    assert p(2) == Fraction(17)
    assert (p - p).is_zero()
    q = p.shift(1)
    assert q(1) == p(2)
    assert q(-5) == p(-4)


def test_unipoly_divmod_roundtrip():
    rng = random.Random(7)
    for _ in range(30):
        a = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 6))])
        b = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_poly_gcd():
    a = UniPoly([-1, 0, 1])  # (n-1)(n+1)
    b = UniPoly([-1, 1])  # n-1
    g = poly_gcd(a, b)
    assert g == UniPoly([-1, 1])


# ---------------------------------------------------------------------------
# MultiPoly


def xy(sx, sy):
    return MultiPoly({(1, 0): sx, (0, 1): sy}, ("x", "y"))


def test_mpoly_mul_cap_trivial():
    s = MultiPoly({(1, 0): 1, (0, 1): 1}, ("x", "y"))
    prod = mpoly_mul(s, s, cap=1)
    assert prod.terms == {(1, 1): 2}


def test_mpoly_mul_identity():
    p = MultiPoly({(2, 1): 3, (0, 0): -1}, ("x", "y"))
    one = MultiPoly.const(1, ("x", "y"))
    assert mpoly_mul(p, one) == p


def test_mpoly_mul_cap_derived():
    # ((x1+x2)*(x1*x2)) capped at 2 -> x1^2*x2 + x1*x2^2
    a = MultiPoly({(1, 0): 1, (0, 1): 1}, ("x1", "x2"))
    b = MultiPoly({(1, 1): 1}, ("x1", "x2"))
    prod = mpoly_mul(a, b, cap=2)
    assert prod.terms == {(2, 1): 1, (1, 2): 1}


def test_mpoly_variable_mismatch():
    a = MultiPoly({(1,): 1}, ("x",))
    b = MultiPoly({(1,): 1}, ("y",))
    with pytest.raises(ValueError):
        mpoly_mul(a, b)


@st.composite
def small_mpoly(draw):
    nterms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(nterms):
        e = (draw(st.integers(0, 3)), draw(st.integers(0, 3)))
        c = draw(st.integers(-4, 4))
        if c:
            terms[e] = c
    return MultiPoly(terms, ("x", "y"))


@settings(max_examples=120, deadline=None)
@given(small_mpoly(), small_mpoly(), small_mpoly())
def test_mpoly_ring_laws(a, b, c):
    assert mpoly_mul(a, b) == mpoly_mul(b, a)
    assert mpoly_mul(mpoly_mul(a, b), c) == mpoly_mul(a, mpoly_mul(b, c))
    assert mpoly_mul(a, b + c) == mpoly_mul(a, b) + mpoly_mul(a, c)


# ---------------------------------------------------------------------------
# nullspace


def test_nullspace_identity():
    A = RatMat.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert nullspace(A) == []


def test_nullspace_single_relation():
    A = RatMat.from_rows([[1, 1]])
    assert nullspace(A) == [[1, -1]]


def test_nullspace_random_rank4():
    rng = random.Random(11)
    while True:
        rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(4)]
        A = RatMat.from_rows(rows)
        vecs = nullspace(A)
        if len(vecs) == 2:
            break
    for v in vecs:
        assert all(x == 0 for x in A.mul_vec(v))


def test_nullspace_matches_bareiss():
    rng = random.Random(3)
    for _ in range(15):
        m = rng.randint(1, 8)
        n = rng.randint(1, 12)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        A = RatMat.from_rows(rows)
        k1 = nullspace(A)
        k2 = nullspace_bareiss(A)
        assert len(k1) == len(k2)
        for v in k1 + k2:
            assert all(x == 0 for x in A.mul_vec(v))
        # same rank + kernel dim identity
        assert len(k1) + (n - len(k1)) == n


def test_nullspace_rank_kernel_dim():
    A = RatMat.from_rows([[1, 2, 3], [2, 4, 6]])
    vecs = nullspace(A)
    assert len(vecs) == 2  # rank 1, 3 cols


def test_nullspace_fraction_entries():
    A = RatMat.from_rows([[Fraction(1, 2), Fraction(1, 3)]])
    vecs = nullspace(A)
    assert vecs == [[2, -3]]


# ---------------------------------------------------------------------------
# rational reconstruction


def test_rr_zero():
    assert rational_reconstruct(0, 101) == Fraction(0)


def test_rr_third():
    assert rational_reconstruct(673, 1009) == Fraction(1, 3)


def test_rr_precondition():
    with pytest.raises(ValueError):
        rational_reconstruct(500, 7)


@settings(max_examples=200, deadline=None)
@given(st.integers(-100, 100), st.integers(1, 100))
def test_rr_roundtrip(p, q):
    m = (1 << 62) - 57  # prime
    from math import gcd as _g

    if _g(abs(p), q) != 1:
        return
    residue = p * pow(q, -1, m) % m
    assert rational_reconstruct(residue, m) == Fraction(p, q)
