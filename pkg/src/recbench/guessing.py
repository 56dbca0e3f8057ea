"""Recurrence guessing engines.

Two engines: classical linear-algebra guessing (exact nullspace of the
ansatz evaluation matrix, minimal-(r,d) search with a minimal-order
refinement stage) and lattice-reduction guessing (exact LLL on a
relation-embedding lattice, preferring small-coefficient recurrences from
fewer terms), plus a plausibility layer that flags artifact recurrences.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    NonExactDivision,
    RatMat,
    UniPoly,
    kernel_basis_z,
    nullspace,
)
from .lll import LatticeBasis, lll_reduce
from .ore import (
    NonIntegerTerm,
    Sequence,
    ShiftOperator,
    SingularLeadingCoefficient,
    annihilates,
    apply_operator,
    unroll,
)

OUTLIER_ROOTS = "OUTLIER_ROOTS"
ULTIMATELY_CONSTANT = "ULTIMATELY_CONSTANT"
LOW_CONFIRMATION = "LOW_CONFIRMATION"
CONFIRMED_HOLDOUT = "CONFIRMED_HOLDOUT"
MINIMALITY_REFINED = "MINIMALITY_REFINED"


@dataclass
class GuessConfig:
    max_order: int = 6
    max_degree: int = 8
    min_order: int = 1
    min_degree: int = 0
    holdout: int = 4
    lll_delta: Fraction = Fraction(3, 4)
    lll_scale_bits: int | None = None
    shift_ansatz: object = None  # callable n -> exact divisor of a_n

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order >= 1 required")
        if not 1 <= self.min_order <= self.max_order:
            raise ValueError("min_order must lie in [1, max_order]")
        if not 0 <= self.min_degree <= self.max_degree:
            raise ValueError("min_degree must lie in [0, max_degree]")
        if self.holdout < 0:
            raise ValueError("holdout >= 0 required")
        if not Fraction(1, 4) < Fraction(self.lll_delta) <= 1:
            raise ValueError("lll_delta must be in (1/4, 1]")


@dataclass
class GuessReport:
    method: str  # "la" | "lll"
    ansatz: tuple  # (r, d)
    terms_used: int
    candidates: list
    validation: list  # per-candidate holdout residuals
    flags: list = field(default_factory=list)

    def best(self):
        return self.candidates[0]

    def to_text(self):
        from .ore import format_operator

        r, d = self.ansatz
        lines = [
            f"method {self.method}",
            f"order {r}",
            f"degree {d}",
            f"terms_used {self.terms_used}",
            f"flags {','.join(sorted(self.flags)) if self.flags else '-'}",
        ]
        for L in self.candidates:
            lines.append(f"operator {format_operator(L)}")
        return "\n".join(lines) + "\n"


def _rescaled(a, cfg):
    """Divide terms by the hypergeometric shift ansatz; must be exact."""
    if cfg.shift_ansatz is None:
        return a
    out = []
    for k, t in enumerate(a.terms):
        n = a.offset + k
        f = cfg.shift_ansatz(n)
        q, rem = divmod(t, f)
        if rem:
            raise NonExactDivision(t, f, where=f"shift_ansatz at n={n}")
        out.append(q)
    return Sequence(a.offset, out, a.id, a.provenance)


def _cells(n_train, cfg, overdetermined):
    cells = []
    for r in range(cfg.min_order, cfg.max_order + 1):
        for d in range(cfg.min_degree, cfg.max_degree + 1):
            cost = (r + 2) * (d + 1)
            unknowns = (r + 1) * (d + 1)
            eqs = n_train - r
            if overdetermined:
                # at least one surplus equation; cells below the
                # comfortable (r+2)(d+1) data cost are admissible but
                # get flagged LOW_CONFIRMATION downstream
                if eqs < unknowns + 1:
                    continue
            else:
                if eqs < 2 or unknowns < 2:
                    continue
            cells.append((cost, r, d))
    cells.sort()
    return [(r, d) for _, r, d in cells]


def _matrix_rows(a, r, d, max_rows=None):
    """Ansatz evaluation rows [n^j * a_{n+i}] over all full windows."""
    rows = []
    hi = a.offset + len(a) - r - 1
    for n in range(a.offset, hi + 1):
        row = []
        for i in range(r + 1):
            t = a.term(n + i)
            val = 1
            for j in range(d + 1):
                row.append(val * t)
                val *= n
        rows.append(row)
        if max_rows is not None and len(rows) >= max_rows:
            break
    return rows

def _vec_to_op(vec, r, d):
    polys = [UniPoly(vec[i * (d + 1) : (i + 1) * (d + 1)]) for i in range(r + 1)]
    if all(p.is_zero() for p in polys):
        return None
    if polys[-1].is_zero():
        return None  # lower-order operator; picked up in its own cell
    return ShiftOperator(polys)


def _solve_cell(a, r, d, max_rows=None):
    rows = _matrix_rows(a, r, d, max_rows)
    vecs = nullspace(RatMat.from_rows(rows))
    ops = []
    for v in vecs:
        L = _vec_to_op(v, r, d)
        if L is not None and L not in ops:
            ops.append(L)
    return ops


def _holdout_residuals(L, a, train_len):
    """Residuals on the windows that reach into the reserved trailing terms."""
    if train_len >= len(a):
        return []
    r = L.order
    lo = max(a.offset, a.offset + train_len - r)
    hi = a.offset + len(a) - r - 1
    if lo > hi:
        return []
    return apply_operator(L, a, window=range(lo, hi + 1))


def _split_holdout(a, cfg):
    h = cfg.holdout
    if len(a) - h < 4:
        h = 0
    return a.prefix(len(a) - h), h


def guess_la(a, cfg=None):
    """Linear-algebra guessing with minimal-(r,d) search.

    Scans admissible (r, d) cells in increasing data cost (r+2)(d+1), ties
    broken by smaller order; solves the exact nullspace of the windowed
    ansatz system; then refines to the minimal-order operator by unrolling
    and re-guessing, accepting the refined operator only if it annihilates
    every original term.  Returns None when no cell yields a kernel.
    """
    cfg = cfg or GuessConfig()
    if len(a) < 4:
        raise ValueError("need at least 4 terms")
    a = _rescaled(a, cfg)
    if all(t == 0 for t in a.terms):
        return None
    train, h = _split_holdout(a, cfg)
    found = None
    for r, d in _cells(len(train), cfg, overdetermined=True):
        ops = _solve_cell(train, r, d)
        if ops:
            found = (r, d, ops)
            break
    if found is None:
        return None
    r, d, ops = found
    validation = [_holdout_residuals(L, a, len(train)) for L in ops]
    # candidates confirmed on holdout come first
    order = sorted(
        range(len(ops)), key=lambda i: (not all(v == 0 for v in validation[i]), i)
    )
    ops = [ops[i] for i in order]
    validation = [validation[i] for i in order]
    report = GuessReport("la", (r, d), len(train), ops, validation)
    report = _refine_minimal_order(report, a, cfg)
    report.flags = list(
        dict.fromkeys(report.flags + plausibility(report, a))
    )
    return report


def _refine_minimal_order(report, a, cfg):
    L0 = report.best()
    r_bound = min(L0.order, cfg.max_order)
    d_bound = cfg.max_degree
    target = (r_bound + 1) * (d_bound + 1) + r_bound + cfg.holdout + 12
    ext = a
    if len(a) < target:
        try:
            ext = unroll(L0, a, a.offset + target - 1)
        except (SingularLeadingCoefficient, NonIntegerTerm):
            return report
    for r in range(1, r_bound + 1):
        for d in range(0, d_bound + 1):
            unknowns = (r + 1) * (d + 1)
            if unknowns + r + 1 > len(ext):
                continue
            ops = _solve_cell(ext, r, d, max_rows=unknowns + 10)
            ops = [L for L in ops if annihilates(L, ext) and annihilates(L, a)]
            if not ops:
                continue
            if (r, d) == report.ansatz:
                return report
            validation = [_holdout_residuals(L, a, len(a) - cfg.holdout) for L in ops]
            return GuessReport(
                "la",
                (r, d),
                len(ext),
                ops,
                validation,
                [MINIMALITY_REFINED],
            )
    return report


def _kernel_dim_mod_p(rows):
    p = (1 << 62) - 57
    m = [[x % p for x in row] for row in rows]
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return ncols - rank


def _data_bits(A):
    """Information content of the windowed data, in bits."""
    return sum(max(abs(x) for x in w).bit_length() for w in A)


def _credible(vec, data_bits):
    """Minimum-description-length gate for guessed relation vectors.

    A relation whose coefficients take more bits to write down than the
    window data they explain is an overfit artifact of underdetermined
    solving, not a discovery; credible relations compress the data.
    """
    return sum(abs(x).bit_length() for x in vec) <= data_bits


def _combine_on_holdout(small, a, train, r, d, delta):
    """Integer combinations of the credible kernel vectors that also
    annihilate the holdout windows.

    The true relation may be split by the reduction across several small
    basis vectors; intersecting their span with the holdout constraints
    recovers it exactly.
    """
    if len(small) < 2:
        return []
    full = _matrix_rows(a, r, d)
    hold = full[len(train) - r:]
    if not hold:
        return []
    resid = [
        [sum(x * y for x, y in zip(w, v)) for v in small] for w in hold
    ]
    combos = kernel_basis_z(resid)
    out = []
    for c in combos:
        vec = [
            sum(ci * v[i] for ci, v in zip(c, small))
            for i in range(len(small[0]))
        ]
        if any(vec):
            out.append(vec)
    if len(out) > 1:
        out = list(lll_reduce(LatticeBasis(out), delta).rows)
    out.sort(key=lambda v: max(abs(x) for x in v))
    return out


def guess_lll(a, cfg=None):
    """Lattice-reduction guessing: small-coefficient recurrences from few terms.

    For each (r, d) cell (including underdetermined ones) considers the
    relation-embedding lattice with rows (e_k | K * A^T_k) for
    magnification K = 2^lll_scale_bits: with K exceeding any plausible
    coefficient size, every vector with a nonzero scaled block is longer
    than every kernel vector, so the reduction is confined to the
    exactly-zero scaled-block section — the saturated integer kernel of
    A, which is computed directly and LLL-reduced.  Harvested vectors are
    exact kernel vectors of the ansatz system with small coefficients.
    Candidates are validated on the holdout terms; the first cell with a
    validated candidate wins, otherwise the first cell with any candidate
    is reported flagged.
    """
    cfg = cfg or GuessConfig()
    if len(a) < 4:
        raise ValueError("need at least 4 terms")
    a = _rescaled(a, cfg)
    if all(t == 0 for t in a.terms):
        return None
    train, h = _split_holdout(a, cfg)
    fallback = None
    for r, d in _cells(len(train), cfg, overdetermined=False):
        A = _matrix_rows(train, r, d)
        if _kernel_dim_mod_p(A) == 0:
            continue
        kernel = kernel_basis_z(A)
        if not kernel:
            continue
        reduced = lll_reduce(LatticeBasis(kernel), cfg.lll_delta)
        rows = sorted(
            reduced.rows, key=lambda v: max(abs(x) for x in v)
        )
        if len(A) < (r + 1) * (d + 1):
            # underdetermined cell: the kernel necessarily contains junk
            # vectors; keep only those compressing the window data
            bits = _data_bits(A)
            rows = [v for v in rows if _credible(v, bits)]
            if not rows:
                continue
        if h > 0:
            bits = _data_bits(_matrix_rows(a, r, d))
            extra = _combine_on_holdout(rows, a, train, r, d, cfg.lll_delta)
            rows = [v for v in extra if _credible(v, bits)] + rows
        cands = []
        for row in rows:
            L = _vec_to_op(list(row), r, d)
            if L is not None and L not in cands:
                cands.append(L)
        if not cands:
            continue
        cands.sort(key=_coeff_size)
        validation = [_holdout_residuals(L, a, len(train)) for L in cands]
        passing = [
            i for i, v in enumerate(validation) if all(x == 0 for x in v)
        ]
        if passing and h > 0:
            cands = [cands[i] for i in passing] + [
                cands[i] for i in range(len(cands)) if i not in passing
            ]
            validation = [_holdout_residuals(L, a, len(train)) for L in cands]
            report = GuessReport("lll", (r, d), len(train), cands, validation)
            report.flags = plausibility(report, a)
            return report
        if fallback is None:
            fallback = GuessReport("lll", (r, d), len(train), cands, validation)
            if h == 0:
                break
    if fallback is not None:
        fallback.flags = plausibility(fallback, a)
    return fallback


def _coeff_size(L):
    return max(
        (abs(c.numerator) for p in L.coeffs for c in p.coeffs), default=0
    )


def plausibility(report, a):
    """Flags describing how trustworthy the best candidate looks."""
    flags = []
    L = report.best()
    r, d = report.ansatz

    # shared integer roots of all coefficient polynomials inside the window
    common = None
    for p in L.coeffs:
        if p.is_zero():
            continue
        roots = set(p.int_roots_in_range(a.offset, a.last_index))
        common = roots if common is None else (common & roots)
        if not common:
            break
    if common:
        flags.append(OUTLIER_ROOTS)

    # (ultimately) constant or stairstep data
    tail = 1
    while tail < len(a) and a.terms[-1 - tail] == a.terms[-1]:
        tail += 1
    distinct = len(set(a.terms))
    nondecreasing = all(x <= y for x, y in zip(a.terms, a.terms[1:]))
    if tail >= max(4, len(a) // 4) or (nondecreasing and distinct * 5 <= len(a)):
        flags.append(ULTIMATELY_CONSTANT)

    surplus = (report.terms_used - r) - (r + 1) * (d + 1)
    if surplus < d + 1:
        flags.append(LOW_CONFIRMATION)

    if report.validation and report.validation[0] and all(
        v == 0 for v in report.validation[0]
    ):
        flags.append(CONFIRMED_HOLDOUT)
    return flags


def combine_interlaced(L_even, L_odd, init, cfg=None):
    """Operator for a sequence whose even/odd subsequences are annihilated
    by L_even/L_odd: unroll both far beyond the guessing budget, guess on
    the interlaced sequence, and certify on three times the guessed window.
    Returns None when no candidate survives certification.
    """
    cfg = cfg or GuessConfig()
    even = Sequence(0, init.terms[0::2])
    odd = Sequence(0, init.terms[1::2])
    guess_len = (
        (cfg.max_order + 1) * (cfg.max_degree + 1) + cfg.max_order + cfg.holdout + 12
    )
    total = 3 * guess_len
    half = total // 2 + 1
    even = unroll(L_even, even, half - 1) if len(even) < half else even
    odd = unroll(L_odd, odd, half - 1) if len(odd) < half else odd
    inter = []
    for e, o in zip(even.terms, odd.terms):
        inter.extend((e, o))
    full = Sequence(init.offset, inter[:total], init.id)
    report = guess_la(full.prefix(guess_len), cfg)
    if report is None:
        return None
    for L in report.candidates:
        if annihilates(L, full):
            return L
    return None
