"""Transfer-matrix engine with catalytic variables.

A TransferSystem is a finite-state machine whose transition weights are
monomials in catalytic variables recording how often each value occurs.
Powers of the matrix, sandwiched between a start and an accept vector,
give counting polynomials from which sequence terms are read off by
coefficient extraction.
"""

from itertools import product
from math import factorial

from ..exact import MultiPoly, divexact, mpoly_divexact, mpoly_mul
from ..ore import Sequence

MAX_GF_DIMENSION = 16


class DimensionTooLarge(Exception):
    """The matrix is too large for exact determinant expansion."""


class TransferSystem:
    """Finite-state machine with monomial transition weights.

    matrix[i][j] is the MultiPoly weight of the transition i -> j (zero
    when forbidden); v_init / v_final are the start and accept vectors.
    steps(n) gives the matrix power at which term n is read, queries(n)
    the exponent vectors whose coefficients are summed, divisor(n) the
    exact final division, and cap(n_max) the per-variable exponent
    ceiling that keeps truncated runs sound.
    """

    def __init__(self, states, matrix, v_init, v_final, variables,
                 steps, queries, divisor=None, cap=None):
        self.states = list(states)
        ell = len(self.states)
        if len(matrix) != ell or any(len(row) != ell for row in matrix):
            raise ValueError("matrix shape does not match state count")
        if len(v_init) != ell or len(v_final) != ell:
            raise ValueError("vector length does not match state count")
        self.matrix = matrix
        self.v_init = list(v_init)
        self.v_final = list(v_final)
        self.variables = tuple(variables)
        self.steps = steps
        self.queries = queries
        self.divisor = divisor if divisor is not None else (lambda n: 1)
        nv = len(self.variables)
        self.cap = cap if cap is not None else (lambda n_max: (n_max,) * nv)


def tm_terms(sys, n_max):
    """First n_max terms (offset 1) of the sequence defined by the system.

    Single forward pass of v <- v.M with exponents truncated at
    cap(n_max); the truncation is sound because all transition weights
    are monomials with nonnegative exponents, so clipped terms can never
    contribute to a capped query.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    cap = sys.cap(n_max)
    k_for = {}
    for n in range(1, n_max + 1):
        k_for.setdefault(sys.steps(n), []).append(n)
    k_max = max(k_for)
    trans = []
    for row in sys.matrix:
        lst = []
        for j, ent in enumerate(row):
            for e, c in ent.terms.items():
                lst.append((j, e, c))
        trans.append(lst)
    w = [dict(p.terms) for p in sys.v_init]
    vf = [dict(p.terms) for p in sys.v_final]
    out = {}
    for k in range(1, k_max + 1):
        if k in k_for:
            tot = {}
            for wi, fi in zip(w, vf):
                for e1, c1 in wi.items():
                    for e2, c2 in fi.items():
                        e = tuple(a + b for a, b in zip(e1, e2))
                        tot[e] = tot.get(e, 0) + c1 * c2
            for n in k_for[k]:
                val = sum(tot.get(tuple(q), 0) for q in sys.queries(n))
                out[n] = divexact(val, sys.divisor(n), f"term {n}")
        if k == k_max:
            break
        new = [{} for _ in sys.states]
        for i, wi in enumerate(w):
            for j, exps, c in trans[i]:
                nj = new[j]
                for e, v in wi.items():
                    ne = tuple(a + b for a, b in zip(e, exps))
                    if any(x > m for x, m in zip(ne, cap)):
                        continue
                    nj[ne] = nj.get(ne, 0) + c * v
        w = new
    return Sequence(1, [out[n] for n in range(1, n_max + 1)])


def bareiss_det(A, variables):
    """Fraction-free determinant of a square MultiPoly matrix.

    Bareiss elimination with row swaps; every division is exact in the
    polynomial ring.
    """
    n = len(A)
    A = [list(row) for row in A]
    sign = 1
    prev = MultiPoly.const(1, variables)
    for k in range(n):
        if A[k][k].is_zero():
            pr = next(
                (i for i in range(k + 1, n) if not A[i][k].is_zero()), None
            )
            if pr is None:
                return MultiPoly.zero(variables)
            A[k], A[pr] = A[pr], A[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t1 = mpoly_mul(A[i][j], piv)
                t2 = mpoly_mul(A[i][k], A[k][j])
                A[i][j] = mpoly_divexact(t1 - t2, prev, "bareiss step")
            A[i][k] = MultiPoly.zero(variables)
        prev = piv
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


def tm_gf(sys):
    """Rational generating function (num, den) with F = sum p_n t^n, n >= 1.

    Cramer's rule on (I - tM) x = v_final: the numerator is
    t * sum_j v_init[j] * det(A with column j replaced by v_final) and the
    denominator det(I - tM), both over the catalytic variables plus t.
    """
    ell = len(sys.states)
    if ell > MAX_GF_DIMENSION:
        raise DimensionTooLarge(
            f"{ell} states exceed the exact-determinant limit "
            f"{MAX_GF_DIMENSION}"
        )
    vs = sys.variables + ("t",)
    nv = len(vs)
    zero_e = (0,) * nv

    def lift(p, tpow=0):
        return MultiPoly(
            {e + (tpow,): c for e, c in p.terms.items()}, vs
        )

    A = []
    for i in range(ell):
        row = []
        for j in range(ell):
            d = {e + (1,): -c for e, c in sys.matrix[i][j].terms.items()}
            if i == j:
                d[zero_e] = d.get(zero_e, 0) + 1
            row.append(MultiPoly(d, vs))
        A.append(row)
    den = bareiss_det(A, vs)
    num = MultiPoly.zero(vs)
    t_mono = MultiPoly.monomial((0,) * (nv - 1) + (1,), 1, vs)
    for j, vi in enumerate(sys.v_init):
        if vi.is_zero():
            continue
        Aj = [list(row) for row in A]
        for i in range(ell):
            Aj[i][j] = lift(sys.v_final[i])
        num = num + mpoly_mul(lift(vi), bareiss_det(Aj, vs))
    num = mpoly_mul(t_mono, num)
    return num, den


def ratfunc_equal(num1, den1, num2, den2):
    """Equality of num1/den1 and num2/den2 by cross-multiplication."""
    return mpoly_mul(num1, den2) == mpoly_mul(num2, den1)


def tm_series_check(sys, n_steps, points):
    """Exact scalar cross-check of tm_gf against the matrix power series.

    Substitutes the integer tuples in points for the catalytic variables,
    expands num/den as a power series in t via the linear recurrence given
    by the denominator, and compares with direct integer matrix powers.
    Returns True when all points agree through t^n_steps.
    """
    num, den = tm_gf(sys)
    nv = len(sys.variables)
    for pt in points:
        if len(pt) != nv:
            raise ValueError("point arity mismatch")
        ncoef = _t_coeffs(num, pt, n_steps)
        dcoef = _t_coeffs(den, pt, n_steps)
        if dcoef[0] == 0:
            return False
        # series s with den * s = num  (denominator constant term required 1)
        if dcoef[0] != 1:
            return False
        series = []
        for k in range(n_steps + 1):
            v = ncoef[k] - sum(
                dcoef[i] * series[k - i] for i in range(1, k + 1)
            )
            series.append(v)
        # direct powers
        mat = [
            [_eval_poly(ent, pt) for ent in row] for row in sys.matrix
        ]
        w = [_eval_poly(p, pt) for p in sys.v_init]
        vf = [_eval_poly(p, pt) for p in sys.v_final]
        for k in range(1, n_steps + 1):
            pk = sum(a * b for a, b in zip(w, vf))
            if pk != series[k]:
                return False
            w = [
                sum(w[i] * mat[i][j] for i in range(len(w)))
                for j in range(len(w))
            ]
    return True


def _eval_poly(p, pt):
    tot = 0
    for e, c in p.terms.items():
        v = c
        for x, k in zip(pt, e):
            v *= x ** k
        tot += v
    return tot


def _t_coeffs(p, pt, n_steps):
    out = [0] * (n_steps + 1)
    for e, c in p.terms.items():
        tp = e[-1]
        if tp > n_steps:
            continue
        v = c
        for x, k in zip(pt, e[:-1]):
            v *= x ** k
        out[tp] += v
    return out


# ---------------------------------------------------------------------------
# concrete systems


def adjacent_permutation_system(m):
    """Permutations of n copies of {1..m} with neighbors differing by <= 1.

    States are the last letter; letter i < m is weighted by its catalytic
    variable, the top letter m is implicit (its count is forced).  m = 5
    is the 5-letter system from the registry.
    """
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    variables = tuple(f"x{i}" for i in range(1, m))
    nv = m - 1

    def mono(letter):
        if letter == m:
            return MultiPoly.const(1, variables)
        e = [0] * nv
        e[letter - 1] = 1
        return MultiPoly.monomial(tuple(e), 1, variables)

    zero = MultiPoly.zero(variables)
    # weight of a transition is the letter being appended (the target)
    matrix = [
        [mono(j) if abs(i - j) <= 1 else zero for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    v_init = [mono(i) for i in range(1, m + 1)]
    v_final = [MultiPoly.const(1, variables)] * m
    return TransferSystem(
        states=list(range(1, m + 1)),
        matrix=matrix,
        v_init=v_init,
        v_final=v_final,
        variables=variables,
        steps=lambda n: m * n,
        queries=lambda n: [(n,) * nv],
    )


_A199250_STATES = [
    (0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (1, 3),
    (2, 0), (2, 1), (2, 3), (3, 0), (3, 1), (3, 2),
]


def a199250_system():
    """n x 2 arrays over {0..3}, balanced counts, unequal neighbors.

    States are the 12 rows with distinct entries; a row may follow
    another unless they agree in the first or the second position.  The
    weight of a transition into row s counts the 0's, 1's and 2's of s.
    """
    variables = ("x", "y", "z")

    def weight(state):
        e = tuple(sum(1 for v in state if v == k) for k in range(3))
        return MultiPoly.monomial(e, 1, variables)

    zero = MultiPoly.zero(variables)
    matrix = []
    for si in _A199250_STATES:
        row = []
        for sj in _A199250_STATES:
            if si[0] == sj[0] or si[1] == sj[1]:
                row.append(zero)
            else:
                row.append(weight(sj))
        matrix.append(row)
    v_init = [weight(_A199250_STATES[0])] + [zero] * 11
    v_final = [MultiPoly.const(1, variables)] * 12

    def queries(n):
        if n % 2 == 0:
            return [(n // 2,) * 3]
        k = (n - 1) // 2
        return [
            q
            for q in product((k, k + 1), repeat=3)
            if sum(q) in (3 * k + 1, 3 * k + 2)
        ]

    return TransferSystem(
        states=list(_A199250_STATES),
        matrix=matrix,
        v_init=v_init,
        v_final=v_final,
        variables=variables,
        steps=lambda n: n,
        queries=queries,
        divisor=lambda n: 1 if n == 1 else 2,
        cap=lambda n_max: ((n_max + 1) // 2,) * 3,
    )


def _column_system(height):
    """Catalytic system for height x n arrays with n copies of each value.

    Values are {0..height-1}; consecutive columns must differ in every
    row ("no equal horizontal neighbors").  All but the top value carry a
    catalytic variable; the final count is divided by height! to undo the
    free relabeling of values.
    """
    values = tuple(range(height))
    states = list(product(values, repeat=height))
    variables = tuple("wxyz"[:height - 1])
    nv = height - 1

    def weight(col):
        e = tuple(sum(1 for v in col if v == k) for k in range(nv))
        return MultiPoly.monomial(e, 1, variables)

    zero = MultiPoly.zero(variables)
    weights = {s: weight(s) for s in states}
    matrix = []
    for si in states:
        row = []
        for sj in states:
            if all(a != b for a, b in zip(si, sj)):
                row.append(weights[sj])
            else:
                row.append(zero)
        matrix.append(row)
    v_init = [weights[s] for s in states]
    v_final = [MultiPoly.const(1, variables)] * len(states)
    return TransferSystem(
        states=states,
        matrix=matrix,
        v_init=v_init,
        v_final=v_final,
        variables=variables,
        steps=lambda n: n,
        queries=lambda n: [(n,) * nv],
        divisor=lambda n: factorial(height),
    )


def a264947_system():
    """256-state catalytic system for the 4 x n array count."""
    return _column_system(4)


def a264946_system():
    """27-state catalytic system for the 3 x n array count."""
    return _column_system(3)


def _row_poly(n, nvalues):
    """Counting polynomial of single rows of length n over {0..nvalues-1}.

    Adjacent entries must differ; exponent k of variable k counts value k
    for k < nvalues - 1 (the top value is implicit).  Returns a raw
    exponent-dict.
    """
    nv = nvalues - 1

    def wexp(v):
        e = [0] * nv
        if v < nv:
            e[v] = 1
        return tuple(e)

    state = {v: {wexp(v): 1} for v in range(nvalues)}
    for _ in range(n - 1):
        new = {v: {} for v in range(nvalues)}
        for u, terms in state.items():
            for v in range(nvalues):
                if v == u:
                    continue
                we = wexp(v)
                acc = new[v]
                for e, c in terms.items():
                    ne = tuple(a + b for a, b in zip(e, we))
                    acc[ne] = acc.get(ne, 0) + c
        state = new
    out = {}
    for terms in state.values():
        for e, c in terms.items():
            out[e] = out.get(e, 0) + c
    return out


def gen_row_factored(height, n_max):
    """Terms of the height x n array count via independent rows.

    The horizontal-neighbor rule acts within each row, so the array count
    is a coefficient of the height-fold product of one row-counting
    polynomial, divided by height! for the value relabeling.  Much
    cheaper than the column-state system, which it must match.
    """
    nv = height - 1
    div = factorial(height)
    out = []
    for n in range(1, n_max + 1):
        q = _row_poly(n, height)
        cap = (n,) * nv
        target = (n,) * nv
        power = {(0,) * nv: 1}
        for _ in range(height):
            new = {}
            for e1, c1 in power.items():
                for e2, c2 in q.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    if any(x > m for x, m in zip(e, cap)):
                        continue
                    new[e] = new.get(e, 0) + c1 * c2
            power = new
        out.append(divexact(power.get(target, 0), div, f"term {n}"))
    return Sequence(1, out)


def gen_a264947(n_max):
    """First n_max terms of the 4 x n array count (desk scale)."""
    return gen_row_factored(4, n_max)


def gen_a264946(n_max):
    """First n_max terms of the 3 x n array count."""
    return gen_row_factored(3, n_max)
