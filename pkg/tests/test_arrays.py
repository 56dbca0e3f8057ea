from math import comb

import pytest

from recbench.enums.arrays import (
    a098926_matrix,
    a181280_conditions,
    a188818_even_part,
    a188818_odd_part,
    a194478_part,
    a253217_validate,
    brute_a188818,
    brute_a194478,
    brute_a195806,
    brute_a216940,
    brute_a253217,
    brute_a306322,
    brute_a339987,
    gen_a098926,
    gen_a181280,
    gen_a188818,
    gen_a194478,
    gen_a195806,
    gen_a216940,
    gen_a253217,
    gen_a306322,
    gen_a339987,
    narayana,
    permanent,
)


def test_a188818_table():
    assert list(gen_a188818(5).terms) == [2, 9, 48, 256, 1360]


def test_a188818_brute():
    assert [brute_a188818(n) for n in (1, 2, 3, 4)] == [2, 9, 48, 256]


def test_a188818_parity_split():
    for n in (2, 3, 4):
        assert brute_a188818(n, parity=0) == a188818_even_part(n)
        assert brute_a188818(n, parity=1) == a188818_odd_part(n)


def test_a306322_table():
    seq = gen_a306322(5)
    assert seq.offset == 0
    assert list(seq.terms) == [1, 0, 0, 25, 386, 4657]


def test_a306322_oracle():
    got = list(gen_a306322(6).terms)
    assert got[1:] == [brute_a306322(n) for n in range(1, 7)]


def test_narayana_trivial():
    assert narayana(1, 1) == 1


def test_a195806_table():
    assert list(gen_a195806(5).terms) == [16, 105, 496, 1759, 5052]


def test_a195806_raw_enumeration():
    assert brute_a195806(1) == 16
    assert list(gen_a195806(1).terms) == [16]


def test_a216940_table():
    assert list(gen_a216940(3).terms) == [260, 27768, 1664244]


def test_a216940_brute_n1():
    assert brute_a216940(1) == 260


def test_a194478_table():
    assert list(gen_a194478(6).terms) == [0, 0, 0, 1, 337, 8733]


def test_a194478_brute():
    got = list(gen_a194478(5).terms)
    assert got == [brute_a194478(n) for n in range(1, 6)]


def test_a194478_part0():
    assert a194478_part(0, 5) == comb(15, 6)


def test_a339987_table():
    assert list(gen_a339987(5).terms) == [1, 4, 90, 8400, 1426950]


def test_a339987_shape_decomposition():
    # the two 8-vertex shapes: 8*C(7,2)*5*C(4,2) and C(8,3)*5*4*3
    assert 8 * comb(7, 2) * 5 * comb(4, 2) == 5040
    assert comb(8, 3) * 5 * 4 * 3 == 3360
    assert list(gen_a339987(4).terms)[-1] == 5040 + 3360


def test_a339987_brute():
    assert list(gen_a339987(3).terms) == [brute_a339987(n) for n in (1, 2, 3)]


def test_a181280_table():
    assert list(gen_a181280(5).terms) == [0, 0, 0, 58, 1629]


def test_a181280_displayed_example():
    rows = [0b01011, 0b10000, 0b11001, 0b11110]
    assert a181280_conditions(rows, 5)
    # swapping two rows breaks the first condition
    assert not a181280_conditions(
        [rows[1], rows[0], rows[2], rows[3]], 5
    )


def test_a253217_table():
    assert list(gen_a253217(6).terms) == [0, 0, 1, 19, 268, 3568]


def test_a253217_displayed_example():
    arr = [
        [0, 1, 1, 2, 3, 4, 5, 5],
        [1, 1, 2, 2, 3, 4, 5, 5],
        [2, 2, 2, 2, 3, 4, 5, 5],
        [2, 2, 3, 3, 3, 4, 5, 5],
        [3, 3, 3, 3, 3, 4, 5, 5],
        [4, 4, 4, 4, 4, 4, 5, 5],
        [4, 5, 5, 5, 5, 5, 5, 5],
        [5, 5, 5, 5, 5, 5, 5, 5],
    ]
    assert a253217_validate(arr)
    bad = [row[:] for row in arr]
    bad[0][1] = 0
    bad[0][2] = 0
    assert not a253217_validate(bad)


def test_a253217_naive():
    got = list(gen_a253217(5).terms)
    assert got == [brute_a253217(n) for n in range(1, 6)]


def test_a098926_table():
    assert list(gen_a098926(6).terms) == [0, 2, 12, 90, 556, 5242]


def test_a098926_displayed_matrix():
    m = a098926_matrix(10)
    zeros = [[j + 1 for j, v in enumerate(r) if v == 0] for r in m]
    assert zeros == [
        [1, 2, 3], [3], [3, 4, 5], [5], [5, 6, 7], [7], [7, 8, 9],
        [9], [9, 10], [],
    ]
    assert permanent(m) == list(gen_a098926(8).terms)[7]


def test_permanent_trivial():
    assert permanent([[1, 1], [1, 1]]) == 2


def test_a194478_part_index_guard():
    with pytest.raises(ValueError):
        a194478_part(4, 3)
