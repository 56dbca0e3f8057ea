import random
from fractions import Fraction
from itertools import product

import pytest

from recbench.lll import LatticeBasis, change_of_basis, lll_reduce


def gs_norms(rows):
    """Squared Gram-Schmidt norms via Fractions (test oracle)."""
    basis = []
    out = []
    for r in rows:
        v = [Fraction(x) for x in r]
        for u in basis:
            nu = sum(a * b for a, b in zip(u, u))
            mu = sum(a * b for a, b in zip(u, v)) / nu
            v = [a - mu * b for a, b in zip(v, u)]
        basis.append(v)
        out.append(sum(a * a for a in v))
    return out


def mus(rows):
    basis = []
    mu_rows = []
    for r in rows:
        v = [Fraction(x) for x in r]
        mr = []
        for u in basis:
            nu = sum(a * b for a, b in zip(u, u))
            mu = sum(Fraction(a) * b for a, b in zip(r, u)) / nu
            mr.append(mu)
            v = [a - mu * b for a, b in zip(v, u)]
        basis.append(v)
        mu_rows.append(mr)
    return mu_rows


def check_reduced(rows, delta=Fraction(3, 4)):
    for mr in mus(rows):
        assert all(abs(m) <= Fraction(1, 2) for m in mr)
    norms = gs_norms(rows)
    m = mus(rows)
    for k in range(1, len(rows)):
        assert norms[k] >= (delta - m[k][k - 1] ** 2) * norms[k - 1]


def test_orthogonal_unchanged():
    B = LatticeBasis([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    R = lll_reduce(B)
    assert sorted(tuple(map(abs, r)) for r in R.rows) == sorted(
        tuple(map(abs, r)) for r in B.rows
    )


def test_relation_style_basis():
    B = LatticeBasis([[1, 0, 1000003], [0, 1, 999999]])
    R = lll_reduce(B)
    norm0 = sum(x * x for x in R.rows[0])
    assert norm0 < 1000003**2
    U, det = change_of_basis(B, R)
    assert det in (1, -1)


def test_2d_shortest_vector():
    rng = random.Random(17)
    for _ in range(20):
        rows = [
            [rng.randint(-30, 30), rng.randint(-30, 30)],
            [rng.randint(-30, 30), rng.randint(-30, 30)],
        ]
        if rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0] == 0:
            continue
        B = LatticeBasis(rows)
        R = lll_reduce(B)
        first = sum(x * x for x in R.rows[0])
        best = min(
            sum((a * rows[0][i] + b * rows[1][i]) ** 2 for i in range(2))
            for a, b in product(range(-40, 41), repeat=2)
            if (a, b) != (0, 0)
        )
        assert first == best  # delta=3/4 in 2D gives a shortest vector


def test_reduction_properties_random():
    rng = random.Random(23)
    for _ in range(10):
        n = rng.randint(2, 6)
        rows = [[rng.randint(-50, 50) for _ in range(n + 1)] for _ in range(n)]
        B = LatticeBasis(rows)
        try:
            R = lll_reduce(B)
        except ValueError:
            continue  # dependent rows
        check_reduced(R.rows)
        U, det = change_of_basis(B, R)
        assert det in (1, -1)


def test_dependent_rows_rejected():
    B = LatticeBasis([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        lll_reduce(B)


def test_delta_validation():
    B = LatticeBasis([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        lll_reduce(B, delta=Fraction(1, 8))
