import pytest

from recbench.enums.cautionary import (
    a187990_closed_form,
    brute_a187990,
    gen_a039836,
    gen_a187990,
    gen_a237684,
    gen_cautionary,
    max_sidon_subset,
)


def test_a237684_prefix():
    seq = gen_a237684(11)
    assert seq.offset == 1
    assert list(seq.terms) == [1, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2]


def test_a237684_ultimately_constant():
    # the quotient dips back to 1 at n = 8 and then settles at 2
    terms = list(gen_a237684(120).terms)
    assert all(t == 2 for t in terms[8:])


def test_a039836_prefix():
    assert list(gen_a039836(20).terms) == [
        1, 2, 3, 3, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7, 7,
    ]


def test_max_sidon_standalone():
    assert max_sidon_subset(1) == 1
    assert max_sidon_subset(7) == 4


def test_a187990_closed_form():
    assert list(gen_a187990(5).terms) == [117, 181, 260, 355, 467]
    assert a187990_closed_form(27) == 9256


def test_a187990_brute():
    got = list(gen_a187990(6).terms)
    assert got == [brute_a187990(n) for n in range(1, 7)]


def test_dispatch():
    assert list(gen_cautionary("A187990", 2).terms) == [117, 181]
    with pytest.raises(KeyError):
        gen_cautionary("A000001", 5)
