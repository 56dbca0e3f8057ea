"""Catalog of the sequences the workbench knows how to compute.

Each entry binds an identifier to its generator (fast exact method), an
optional independent oracle (slow brute force, for cross-checks), the
conjecture formulas that apply to it, and the reference expectations
(N, M, L, r, d, status) used by the report command.  The expectations
are transcribed reference data, never computed.
"""

import re
from dataclasses import dataclass

from .enums import cautionary, conjectures, kaprekar, machines, perms, transfer, walks
from .enums.arrays import (
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
)
from .ore import Sequence

_ID_RE = re.compile(r"^A\d{6}$")


@dataclass(frozen=True)
class Expectations:
    """One reference row: terms-available and guessing statistics.

    status is P (recurrence proven), D (D-finiteness proven, recurrence
    not), or O (open).  None marks an unknown (--/?) column.
    """

    n_terms: int
    m_la: int | None
    l_lll: int | None
    order: int | None
    degree: int | None
    status: str


@dataclass(frozen=True)
class RegistryEntry:
    id: str
    offset: int
    first_terms: tuple
    generator: object  # callable(count) -> Sequence of `count` terms
    oracle: object = None  # callable(count) -> list of `count` terms
    conjecture_ids: tuple = ()
    expectations: Expectations = None
    # largest count the generator handles in reasonable time (advisory)
    generator_cap: int = None

    def __post_init__(self):
        if not _ID_RE.match(self.id):
            raise ValueError(f"malformed id {self.id!r}")

    def terms(self, count):
        seq = self.generator(count)
        if len(seq.terms) != count or seq.offset != self.offset:
            raise AssertionError(
                f"{self.id}: generator returned {len(seq.terms)} terms "
                f"at offset {seq.offset}, wanted {count} at {self.offset}"
            )
        return Sequence(seq.offset, seq.terms, id=self.id)

    def oracle_terms(self, count):
        if self.oracle is None:
            raise KeyError(f"{self.id} has no independent oracle")
        return Sequence(
            self.offset, self.oracle(count), id=self.id, provenance="oracle"
        )

    def conjectures(self):
        return [conjectures.CONJECTURES[c] for c in self.conjecture_ids]


def _from0(gen):
    """Adapt an offset-0 generator whose argument is the top index."""
    return lambda count: gen(count - 1)


def _orcl(term_fn, offset):
    """Adapt a per-index oracle function to a terms-list callable."""
    return lambda count: [term_fn(n) for n in range(offset, offset + count)]


def _a172572_terms(count):
    return walks.gen_orthant_walks(walks.a172572_stepset(), count)


def _a172671_terms(count):
    return walks.gen_orthant_walks(walks.a172671_stepset(), count)


def _a199250_terms(count):
    return transfer.tm_terms(transfer.a199250_system(), count)


def _a177317_oracle(count):
    seq = transfer.tm_terms(transfer.adjacent_permutation_system(5), count - 1)
    return [1] + list(seq.terms)


def _a164735_oracle(count):
    return [kaprekar.brute_a164735(n) for n in range(1, count + 1)]


def _entry(seq_id, offset, first_terms, generator, oracle=None,
           conjecture_ids=(), expect=None, cap=None):
    exp = Expectations(*expect) if expect else None
    return RegistryEntry(
        seq_id, offset, tuple(first_terms), generator, oracle,
        tuple(conjecture_ids), exp, cap,
    )


REGISTRY = {
    e.id: e
    for e in [
        _entry(
            "A187990", 1, (117, 181, 260, 355, 467),
            cautionary.gen_a187990,
            _orcl(cautionary.brute_a187990, 1),
            expect=(50, None, None, 1, 3, "P"),
        ),
        _entry(
            "A177317", 0, (1, 2, 48, 2288, 135040),
            _from0(lambda n: perms.gen_adjacent_permutations(5, n)),
            _a177317_oracle,
            expect=(29, 60, 22, 3, 14, "P"),
        ),
        _entry(
            "A199250", 1, (1, 1, 14, 21, 424, 571),
            _a199250_terms,
            expect=(56, 98, 56, 8, 18, "P"),
        ),
        _entry(
            "A250556", 1, (8, 60, 302, 1516, 7126),
            machines.gen_a250556,
            lambda count: list(machines.brute_a250556(count).terms),
            expect=(47, 58, 47, 9, 8, "P"),
        ),
        _entry(
            "A264947", 1, (1, 60, 3201, 184740),
            transfer.gen_a264947,
            expect=(20, None, None, None, None, "D"),
            cap=8,
        ),
        _entry(
            "A265234", 1, (1, 43, 2592, 184740),
            walks.gen_a265234,
            expect=(31, 56, 27, 6, 6, "P"),
            cap=62,
        ),
        _entry(
            "A172572", 1, (90, 67950, 90291600),
            _a172572_terms,
            _orcl(walks.sum_a172572, 1),
            conjecture_ids=("A172572",),
            expect=(33, 44, 17, 3, 9, "D"),
            cap=33,
        ),
        _entry(
            "A172671", 1, (90, 202410, 747558000),
            _a172671_terms,
            conjecture_ids=("A172671",),
            expect=(33, 75, 25, 4, 13, "D"),
            cap=33,
        ),
        _entry(
            "A188818", 1, (2, 9, 48, 256, 1360),
            gen_a188818,
            _orcl(brute_a188818, 1),
            expect=(32, 55, 26, 5, 10, "P"),
        ),
        _entry(
            "A306322", 0, (1, 0, 0, 25, 386, 4657),
            _from0(gen_a306322),
            lambda count: [1] + [brute_a306322(n) for n in range(1, count)],
            expect=(41, 63, 30, 4, 14, "P"),
        ),
        _entry(
            "A195806", 1, (16, 105, 496, 1759, 5052),
            gen_a195806,
            _orcl(brute_a195806, 1),
            conjecture_ids=("A195806",),
            expect=(32, 41, 30, 4, 10, "D"),
            cap=12,
        ),
        _entry(
            "A216940", 1, (260, 27768, 1664244),
            gen_a216940,
            _orcl(brute_a216940, 1),
            conjecture_ids=("A216940",),
            expect=(37, 44, 29, 1, 23, "D"),
            cap=4,
        ),
        _entry(
            "A194478", 1, (0, 0, 0, 1, 337, 8733),
            gen_a194478,
            _orcl(brute_a194478, 1),
            conjecture_ids=("A194478",),
            expect=(32, 35, 19, 2, 12, "P"),
        ),
        _entry(
            "A215570", 0, (1, 35, 18720, 19369350),
            _from0(perms.gen_a215570),
            lambda count: [1] + [perms.brute_a215570(n) for n in range(1, count)],
            conjecture_ids=("A215570",),
            expect=(48, 68, 27, 3, 15, "O"),
            cap=25,
        ),
        _entry(
            "A339987", 1, (1, 4, 90, 8400, 1426950),
            gen_a339987,
            _orcl(brute_a339987, 1),
            conjecture_ids=("A339987",),
            expect=(40, 70, 24, 5, 10, "O"),
        ),
        _entry(
            "A269021", 0, (1, 2, 23, 588, 24553),
            _from0(perms.gen_a269021),
            lambda count: [1] + [perms.brute_a269021(n) for n in range(1, count)],
            conjecture_ids=("A269021",),
            expect=(42, 108, 28, 4, 21, "O"),
        ),
        _entry(
            "A181198", 1, (1, 1, 8, 169, 6392),
            lambda count: perms.gen_young_monotone(4, count),
            conjecture_ids=("A181198",),
            expect=(27, 33, 14, 2, 9, "O"),
            cap=60,
        ),
        _entry(
            "A181199", 1, (1, 1, 16, 985, 141696),
            lambda count: perms.gen_young_monotone(5, count),
            conjecture_ids=("A181199",),
            expect=(26, 103, 34, 3, 24, "O"),
            cap=40,
        ),
        _entry(
            "A181280", 1, (0, 0, 0, 58, 1629, 28924),
            gen_a181280,
            conjecture_ids=("A181280",),
            expect=(27, 32, 26, 10, 1, "O"),
            cap=7,
        ),
        _entry(
            "A253217", 1, (0, 0, 1, 19, 268, 3568),
            gen_a253217,
            _orcl(brute_a253217, 1),
            conjecture_ids=("A253217",),
            expect=(37, 53, 27, 5, 9, "O"),
        ),
        _entry(
            "A098926", 1, (0, 2, 12, 90, 556, 5242),
            gen_a098926,
            conjecture_ids=("A098926",),
            expect=(34, 55, 26, 8, 7, "O"),
            cap=22,
        ),
        _entry(
            "A164735", 1, (0, 0, 0, 0, 0, 0, 0, 1, 0, 4),
            kaprekar.gen_a164735,
            _a164735_oracle,
            conjecture_ids=("A164735",),
            expect=(70, 80, 66, 15, 4, "O"),
            cap=30,
        ),
        _entry(
            "A237684", 1, (1, 1, 1, 1, 1, 1, 2, 1, 2, 2),
            cautionary.gen_a237684,
        ),
        _entry(
            "A039836", 1, (1, 2, 3, 3, 4, 4, 4, 5),
            cautionary.gen_a039836,
            cap=50,
        ),
    ]
}

TABLE_IDS = tuple(e for e in REGISTRY if REGISTRY[e].expectations)


def get_entry(seq_id):
    if seq_id not in REGISTRY:
        raise KeyError(f"unknown sequence id {seq_id!r}")
    return REGISTRY[seq_id]
