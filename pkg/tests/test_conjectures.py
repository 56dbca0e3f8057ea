from fractions import Fraction

import pytest

from recbench.enums.arrays import (
    gen_a098926,
    gen_a181280,
    gen_a194478,
    gen_a195806,
    gen_a216940,
    gen_a253217,
    gen_a339987,
)
from recbench.enums.conjectures import (
    CONJECTURES,
    ConjectureSpec,
    check_conjecture,
    eval_conjecture,
    frac_binom,
    rising,
)
from recbench.enums.kaprekar import gen_a164735
from recbench.enums.perms import gen_a215570, gen_a269021, gen_young_monotone
from recbench.enums.walks import (
    a172572_stepset,
    a172671_stepset,
    gen_orthant_walks,
)
from recbench.exact import NonExactDivision


def test_rising_and_binom():
    assert rising(3, 4) == 3 * 4 * 5 * 6
    assert rising(Fraction(1, 2), 3) == Fraction(15, 8)
    assert rising(5, 0) == 1
    assert frac_binom(Fraction(5, 2), 2) == Fraction(15, 8)


def test_eval_examples():
    assert eval_conjecture(CONJECTURES["A194478"], 4) == 1
    assert eval_conjecture(CONJECTURES["A194478"], 5) == 337
    assert eval_conjecture(CONJECTURES["A181280"], 4) == 58
    assert eval_conjecture(CONJECTURES["A164735"], 8) == 1
    assert eval_conjecture(CONJECTURES["A195806"], 1) == 16


def test_eval_guards():
    with pytest.raises(ValueError):
        eval_conjecture(CONJECTURES["A215570"], 3)  # recurrence kind
    with pytest.raises(ValueError):
        eval_conjecture(CONJECTURES["A181280"], 2)  # below validity
    bogus = ConjectureSpec("X", "closed_form", 0, formula=lambda n: Fraction(1, 2))
    with pytest.raises(NonExactDivision):
        eval_conjecture(bogus, 1)


def _assert_agrees(seq_id, seq):
    report = check_conjecture(CONJECTURES[seq_id], seq)
    assert report.ok, (
        f"{seq_id}: first disagreement at {report.first_disagreement}"
    )
    assert report.largest_verified == seq.last_index


def test_term_formulas_against_generators():
    _assert_agrees("A195806", gen_a195806(6))
    _assert_agrees("A216940", gen_a216940(3))
    _assert_agrees("A194478", gen_a194478(8))
    _assert_agrees("A181280", gen_a181280(6))
    _assert_agrees("A181198", gen_young_monotone(4, 8))
    _assert_agrees("A181199", gen_young_monotone(5, 6))
    _assert_agrees("A164735", gen_a164735(21))


def test_recurrences_against_generators():
    _assert_agrees("A215570", gen_a215570(6))
    _assert_agrees("A339987", gen_a339987(8))
    _assert_agrees("A269021", gen_a269021(10))
    _assert_agrees("A253217", gen_a253217(8))
    _assert_agrees("A098926", gen_a098926(12))
    _assert_agrees("A172572", gen_orthant_walks(a172572_stepset(), 8))
    _assert_agrees("A172671", gen_orthant_walks(a172671_stepset(), 8))


def test_disagreement_is_reported():
    seq = gen_a181280(6)
    broken = type(seq)(seq.offset, list(seq.terms[:-1]) + [seq.terms[-1] + 1])
    report = check_conjecture(CONJECTURES["A181280"], broken)
    assert not report.ok
    assert report.first_disagreement == 6
    assert report.largest_verified == 5
