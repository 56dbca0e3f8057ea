"""The reproduction report: reference guessing statistics vs. ours.

For each requested sequence the report gathers terms (bundled b-file if
present, generator otherwise), runs both guessers, and bisects over the
prefix length for the minimal number of terms from which each guesser
recovers an operator that annihilates everything we have (M' for the
linear-algebra guesser, L' for the lattice guesser).  The reference
columns are displayed beside ours but never asserted equal.
"""

import os
from dataclasses import dataclass

from .bfile import parse_bfile
from .guessing import GuessConfig, guess_la, guess_lll
from .ore import annihilates
from .registry import get_entry


@dataclass
class ReportRow:
    seq_id: str
    n_terms: int = 0
    m_prime: int = None
    l_prime: int = None
    order: int = None
    degree: int = None
    flags: tuple = ()
    error: str = None
    expectations: object = None

    def to_line(self):
        e = self.expectations

        def col(v):
            return "-" if v is None else str(v)

        if self.error:
            return f"{self.seq_id} ERROR {self.error}"
        ref = (
            f"N={col(e.n_terms)} M={col(e.m_la)} L={col(e.l_lll)} "
            f"r={col(e.order)} d={col(e.degree)} status={e.status}"
            if e
            else "unlisted"
        )
        flags = ",".join(sorted(self.flags)) if self.flags else "-"
        return (
            f"{self.seq_id} terms={self.n_terms} "
            f"M'={col(self.m_prime)} L'={col(self.l_prime)} "
            f"r'={col(self.order)} d'={col(self.degree)} "
            f"flags={flags} | {ref}"
        )


def _gather_terms(entry, budget, bfile_dir=None):
    if bfile_dir:
        path = os.path.join(bfile_dir, f"b{entry.id[1:]}.txt")
        if os.path.exists(path):
            with open(path) as f:
                seq = parse_bfile(f.read(), entry.id)
            if len(seq.terms) > budget:
                seq = seq.prefix(budget)
            return seq
    count = budget
    if entry.expectations and entry.expectations.n_terms:
        count = min(count, entry.expectations.n_terms)
    if entry.generator_cap:
        count = min(count, entry.generator_cap)
    return entry.terms(count)


def _succeeds(guesser, seq, m, cfg):
    """Does guessing from the first m terms explain all of them?"""
    try:
        report = guesser(seq.prefix(m), cfg)
    except Exception:
        return False
    if report is None or not report.candidates:
        return False
    return annihilates(report.best(), seq)


def _min_prefix(guesser, seq, cfg):
    """Minimal prefix length that succeeds, by bisection (None if the
    full data does not suffice)."""
    hi = len(seq.terms)
    if not _succeeds(guesser, seq, hi, cfg):
        return None
    lo = 5  # below this the guessers refuse or overfit trivially
    while lo < hi:
        mid = (lo + hi) // 2
        if _succeeds(guesser, seq, mid, cfg):
            hi = mid
        else:
            lo = mid + 1
    return hi


def run_report(ids, budget=60, cfg=None, bfile_dir=None):
    """ReportRows for the given ids (stable order, errors per row)."""
    cfg = cfg or GuessConfig()
    rows = []
    for seq_id in ids:
        try:
            entry = get_entry(seq_id)
        except KeyError as e:
            rows.append(ReportRow(seq_id, error=str(e)))
            continue
        row = ReportRow(seq_id, expectations=entry.expectations)
        try:
            seq = _gather_terms(entry, budget, bfile_dir)
            row.n_terms = len(seq.terms)
            row.m_prime = _min_prefix(guess_la, seq, cfg)
            row.l_prime = _min_prefix(guess_lll, seq, cfg)
            best = None
            for guesser in (guess_la, guess_lll):
                report = guesser(seq, cfg)
                if report is not None and report.candidates:
                    best = report
                    break
            if best is not None:
                L = best.best()
                row.order = L.order
                row.degree = L.degree
                row.flags = tuple(best.flags)
        except Exception as e:
            row.error = f"{type(e).__name__}: {e}"
        rows.append(row)
    return rows


def report_text(rows):
    return "".join(row.to_line() + "\n" for row in rows)
