from itertools import permutations

import pytest

from recbench.exact import MultiPoly, NonExactDivision, mpoly_divexact, mpoly_mul
from recbench.enums.transfer import (
    DimensionTooLarge,
    TransferSystem,
    a199250_system,
    a264946_system,
    a264947_system,
    adjacent_permutation_system,
    bareiss_det,
    gen_a264946,
    gen_a264947,
    ratfunc_equal,
    tm_gf,
    tm_series_check,
    tm_terms,
)

X5 = ("x1", "x2", "x3", "x4", "t")


def mp(variables, *terms):
    """Build a MultiPoly from (coeff, exps) pairs."""
    d = {}
    for c, e in terms:
        d[tuple(e)] = d.get(tuple(e), 0) + c
    return MultiPoly(d, variables)


def one_state_system():
    v = ("x",)
    m = MultiPoly.monomial((1,), 1, v)
    return TransferSystem(
        states=[0],
        matrix=[[m]],
        v_init=[m],
        v_final=[MultiPoly.const(1, v)],
        variables=v,
        steps=lambda n: n,
        queries=lambda n: [(n,)],
    )


def test_one_state_all_ones():
    assert list(tm_terms(one_state_system(), 6).terms) == [1] * 6


def test_one_state_gf_geometric():
    num, den = tm_gf(one_state_system())
    # t*x / (1 - t*x)
    v = ("x", "t")
    assert num == mp(v, (1, (1, 1)))
    assert den == mp(v, (1, (0, 0)), (-1, (1, 1)))


def test_a177317_terms():
    # Table row is 1, 2, 48, 2288, 135040 with the leading 1 for the
    # empty permutation at n=0; the system starts at n=1
    seq = tm_terms(adjacent_permutation_system(5), 4)
    assert list(seq.terms) == [2, 48, 2288, 135040]


def test_adjacent_m1_trivial():
    assert list(tm_terms(adjacent_permutation_system(1), 5).terms) == [1] * 5


def test_adjacent_m3_brute():
    sys3 = adjacent_permutation_system(3)
    got = tm_terms(sys3, 3).terms
    for n in range(1, 4):
        word = [1] * n + [2] * n + [3] * n
        count = sum(
            1
            for p in set(permutations(word))
            if all(abs(a - b) <= 1 for a, b in zip(p, p[1:]))
        )
        assert got[n - 1] == count


def test_tm_terms_cap_never_clips():
    # the per-variable exponent cap drops only monomials that cannot
    # contribute to a capped query, so a short run must equal the prefix
    # of a longer (looser-capped) one
    for sys in (adjacent_permutation_system(4), a199250_system()):
        short = list(tm_terms(sys, 3).terms)
        long = list(tm_terms(sys, 6).terms)
        assert short == long[: len(short)]


def test_a177317_extraction_symmetry():
    # alphabet reversal 1<->5, 2<->4: coefficient of x1^a x2^b x3^c x4^d in
    # p_k equals that of x1^(k-a-b-c-d) x2^d x3^c x4^b
    sys5 = adjacent_permutation_system(5)
    cap = (8,) * 4
    trans = sys5.matrix
    w = [dict(p.terms) for p in sys5.v_init]
    k = 1
    while k < 8:
        new = [{} for _ in range(5)]
        for i, wi in enumerate(w):
            for j in range(5):
                for exps, c in trans[i][j].terms.items():
                    for e, v in wi.items():
                        ne = tuple(a + b for a, b in zip(e, exps))
                        if any(x > m for x, m in zip(ne, cap)):
                            continue
                        new[j][ne] = new[j].get(ne, 0) + c * v
        w = new
        k += 1
    pk = {}
    for wi in w:
        for e, c in wi.items():
            pk[e] = pk.get(e, 0) + c
    for (a, b, c, d), v in pk.items():
        e2 = (k - a - b - c - d, d, c, b)
        if all(x <= 8 for x in e2):
            assert pk.get(e2, 0) == v


def test_a199250_terms():
    seq = tm_terms(a199250_system(), 6)
    assert list(seq.terms) == [1, 1, 14, 21, 424, 571]


def test_a199250_gf_matches_printed():
    num, den = tm_gf(a199250_system())
    v = ("x", "y", "z", "t")
    x, y, z, t = range(4)

    def e(**kw):
        out = [0, 0, 0, 0]
        for name, k in kw.items():
            out["xyzt".index(name)] = k
        return tuple(out)

    printed_num = mp(v, (1, e(t=1, x=1, y=1)), (1, e(t=2, x=1, y=1, z=1)))
    printed_den = mp(
        v,
        (1, e()),
        (-1, e(t=1, x=1)),
        (-1, e(t=1, y=1)),
        (-1, e(t=1, x=1, y=1)),
        (-1, e(t=1, z=1)),
        (-1, e(t=1, x=1, z=1)),
        (-1, e(t=1, y=1, z=1)),
        (-7, e(t=2, x=1, y=1, z=1)),
    )
    assert ratfunc_equal(num, den, printed_num, printed_den)


def test_a177317_gf_matches_printed():
    num, den = tm_gf(adjacent_permutation_system(5))
    v = X5

    def e(t=0, x1=0, x2=0, x3=0, x4=0):
        return (x1, x2, x3, x4, t)

    quad = [(1, 1, 0, 0), (1, 1, 0, 1), (0, 1, 0, 1), (1, 0, 0, 1)]
    printed_num = mp(
        v,
        *[(2, e(t=3, x1=a, x2=b, x3=1 + c, x4=d)) for a, b, c, d in quad],
        (-1, e(t=2, x1=1, x2=1, x3=1)),
        (3, e(t=2, x1=1, x3=1)),
        (-1, e(t=2, x2=1, x3=1, x4=1)),
        (-1, e(t=2, x3=1, x4=1)),
        (-2, e(t=1, x1=1, x3=1)),
        (-2, e(t=1, x1=1, x4=1)),
        (-2, e(t=1, x1=1)),
        (-2, e(t=1, x2=1)),
        (-2, e(t=1, x3=1)),
        (-2, e(t=1, x2=1, x4=1)),
        (1, e(x1=1)),
        (1, e(x2=1)),
        (1, e(x3=1)),
        (1, e(x4=1)),
        (1, e()),
    )
    printed_den = mp(
        v,
        *[(-1, e(t=4, x1=a, x2=b, x3=1 + c, x4=d)) for a, b, c, d in quad],
        (1, e(t=3, x1=1, x2=1, x3=1)),
        (-1, e(t=3, x1=1, x3=1)),
        (1, e(t=3, x2=1, x3=1, x4=1)),
        (1, e(t=3, x3=1, x4=1)),
        (1, e(t=2, x1=1, x3=1)),
        (1, e(t=2, x1=1, x4=1)),
        (1, e(t=2, x1=1)),
        (1, e(t=2, x2=1)),
        (1, e(t=2, x3=1)),
        (1, e(t=2, x2=1, x4=1)),
        (-1, e(t=1, x1=1)),
        (-1, e(t=1, x2=1)),
        (-1, e(t=1, x3=1)),
        (-1, e(t=1, x4=1)),
        (-1, e(t=1)),
        (1, e()),
    )
    # the printed series starts one power of t lower: F_printed = F/t
    tmono = MultiPoly.monomial((0, 0, 0, 0, 1), 1, v)
    lhs = mpoly_mul(num, printed_den)
    rhs = mpoly_mul(tmono, mpoly_mul(printed_num, den))
    assert lhs == rhs


def test_series_consistency():
    assert tm_series_check(one_state_system(), 15, [(3,)])
    assert tm_series_check(
        adjacent_permutation_system(5), 15, [(1, 2, 1, 3), (2, 1, 1, 1)]
    )
    assert tm_series_check(a199250_system(), 15, [(1, 2, 3), (2, 2, 1)])


def test_gf_dimension_guard():
    with pytest.raises(DimensionTooLarge):
        tm_gf(a264947_system())


def test_a264947_prefix():
    assert list(gen_a264947(4).terms) == [1, 60, 3201, 184740]


def test_a264947_matches_column_system():
    assert list(tm_terms(a264947_system(), 3).terms) == list(gen_a264947(3).terms)


def test_a264946_matches_column_system_and_brute():
    got = list(gen_a264946(3).terms)
    assert list(tm_terms(a264946_system(), 3).terms) == got
    # direct check at n=2: 3x2 arrays with two copies of each of {0,1,2},
    # unequal horizontal neighbors, values introduced sequentially
    from itertools import product as iproduct

    count = 0
    for cells in iproduct(range(3), repeat=6):
        rows = [cells[0:2], cells[2:4], cells[4:6]]
        if any(r[0] == r[1] for r in rows):
            continue
        if any(cells.count(v) != 2 for v in range(3)):
            continue
        order = []
        for v in cells:
            if v not in order:
                order.append(v)
        if order == sorted(order):
            count += 1
    assert got[1] == count


def test_bareiss_det_matches_cofactor():
    v = ("a", "b")
    m00 = mp(v, (1, (1, 0)))
    m01 = mp(v, (2, (0, 1)))
    m10 = mp(v, (1, (1, 1)))
    m11 = mp(v, (3, (0, 0)), (1, (2, 0)))
    det = bareiss_det([[m00, m01], [m10, m11]], v)
    expect = mpoly_mul(m00, m11) - mpoly_mul(m01, m10)
    assert det == expect


def test_bareiss_det_zero_pivot():
    v = ("a",)
    z = MultiPoly.zero(v)
    one = MultiPoly.const(1, v)
    a = mp(v, (1, (1,)))
    # [[0, 1], [a, 0]] -> det = -a
    det = bareiss_det([[z, one], [a, z]], v)
    assert det == -a
    # singular matrix
    det0 = bareiss_det([[z, z], [a, a]], v)
    assert det0.is_zero()


def test_mpoly_divexact_roundtrip():
    v = ("a", "b")
    p = mp(v, (2, (1, 0)), (3, (0, 1)), (1, (0, 0)))
    q = mp(v, (1, (2, 1)), (-4, (0, 0)))
    assert mpoly_divexact(mpoly_mul(p, q), q) == p
    with pytest.raises(NonExactDivision):
        mpoly_divexact(q, p)
