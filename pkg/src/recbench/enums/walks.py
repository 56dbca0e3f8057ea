"""Lattice-walk counting: stepset diagonals and orthant walks.

All walks here use componentwise-nonnegative steps, so confining the
count to the box {0..n_max}^d is sound: a walk that leaves the box can
never return to a diagonal point inside it.  When the weighted stepset
is symmetric under coordinate permutations the DP runs on sorted
exponent tuples, accumulating backwards over the steps (orbit-safe).
"""

from itertools import combinations, product
from math import comb, factorial

from ..exact import divexact
from ..ore import Sequence


class StepSet:
    """Weighted set of componentwise-nonnegative integer steps."""

    def __init__(self, dimension, steps, weights=None):
        self.dimension = dimension
        self.steps = [tuple(s) for s in steps]
        if any(len(s) != dimension for s in self.steps):
            raise ValueError("step arity mismatch")
        if any(min(s) < 0 for s in self.steps):
            raise ValueError("steps must be componentwise nonnegative")
        self.weights = list(weights) if weights is not None else [1] * len(
            self.steps
        )
        if len(self.weights) != len(self.steps):
            raise ValueError("weights length mismatch")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be >= 1")

    def is_symmetric(self):
        """Invariance of the weighted step multiset under coordinate swaps."""
        table = {}
        for s, w in zip(self.steps, self.weights):
            table[s] = table.get(s, 0) + w
        for s, w in table.items():
            for i in range(self.dimension - 1):
                t = list(s)
                t[i], t[i + 1] = t[i + 1], t[i]
                if table.get(tuple(t), 0) != w:
                    return False
        return True


def gen_stepset_diagonal(s, divisor, n_max, steps_per_n=1):
    """a_n = <x1^n...xd^n> (step polynomial)^(steps_per_n * n) / divisor.

    Single forward pass serving every n <= n_max, exponents capped at
    n_max per coordinate.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    d = s.dimension
    if s.is_symmetric():
        return Sequence(
            1, _diagonal_symmetric(s, divisor, n_max, steps_per_n)
        )
    return Sequence(1, _diagonal_generic(s, divisor, n_max, steps_per_n))


def _diagonal_generic(s, divisor, n_max, steps_per_n):
    d = s.dimension
    cap = n_max
    steps = list(zip(s.steps, s.weights))
    p = {(0,) * d: 1}
    out = []
    for k in range(1, steps_per_n * n_max + 1):
        new = {}
        for e, c in p.items():
            for u, w in steps:
                ne = tuple(a + b for a, b in zip(e, u))
                if any(x > cap for x in ne):
                    continue
                new[ne] = new.get(ne, 0) + w * c
        p = new
        if k % steps_per_n == 0:
            n = k // steps_per_n
            out.append(
                divexact(p.get((n,) * d, 0), divisor, f"term {n}")
            )
    return out


def _diagonal_symmetric(s, divisor, n_max, steps_per_n):
    d = s.dimension
    cap = n_max
    steps = list(zip(s.steps, s.weights))
    p = {(0,) * d: 1}
    out = []
    for k in range(1, steps_per_n * n_max + 1):
        cands = set()
        for e in p:
            for u, _ in steps:
                ne = tuple(sorted(a + b for a, b in zip(e, u)))
                if ne[-1] <= cap:
                    cands.add(ne)
        new = {}
        for w_key in cands:
            tot = 0
            for u, w in steps:
                pe = tuple(a - b for a, b in zip(w_key, u))
                if min(pe) < 0:
                    continue
                c = p.get(tuple(sorted(pe)))
                if c:
                    tot += w * c
            if tot:
                new[w_key] = tot
        p = new
        if k % steps_per_n == 0:
            n = k // steps_per_n
            out.append(
                divexact(p.get((n,) * d, 0), divisor, f"term {n}")
            )
    return out


def a265234_stepset():
    """The 108 admissible height-4 columns as weighted 3D steps.

    Exponents count 0's, 1's and 2's in a column; the weight is the
    number of columns realizing the step.
    """
    steps = []
    weights = []
    for col_counts, w in _column_step_table().items():
        steps.append(col_counts)
        weights.append(w)
    return StepSet(3, steps, weights)


def _column_step_table():
    table = {}
    for col in product(range(4), repeat=4):
        if any(a == b for a, b in zip(col, col[1:])):
            continue
        key = tuple(sum(1 for v in col if v == k) for k in range(3))
        table[key] = table.get(key, 0) + 1
    return table


def gen_a265234(n_max):
    """Balanced 4 x n arrays over {0..3} with unequal vertical neighbors."""
    return gen_stepset_diagonal(a265234_stepset(), 24, n_max)


def a172572_stepset():
    """The 15 rows of weight 2: e_i + e_j over 6 coordinates."""
    steps = []
    for i, j in combinations(range(6), 2):
        e = [0] * 6
        e[i] = e[j] = 1
        steps.append(tuple(e))
    return StepSet(6, steps)


def a172671_stepset():
    """The 21 rows of sum 2 over {0,1,2}: pairs plus doubled singles."""
    steps = list(a172572_stepset().steps)
    for i in range(6):
        e = [0] * 6
        e[i] = 2
        steps.append(tuple(e))
    return StepSet(6, steps)


def gen_orthant_walks(s, n_max):
    """Walks from the origin to (n,..,n) in N^6 with the given stepset.

    Every step has coordinate sum 2, so the diagonal (n,...,n) is read
    after 3n steps.
    """
    if s.dimension != 6:
        raise ValueError("orthant walk counting expects dimension 6")
    if any(sum(u) != 2 for u in s.steps):
        raise ValueError("steps must have coordinate sum 2")
    return gen_stepset_diagonal(s, 1, n_max, steps_per_n=3)


def vandermonde_sum(m, n, r):
    """Sum over k of binom(m, k) * binom(n, r - k).

    Equals binom(m + n, r) by the Vandermonde convolution; this is the
    identity that collapses inner summations of multinomial array-count
    sums such as sum_a172572.
    """
    if r < 0:
        return 0
    return sum(
        comb(m, k) * comb(n, r - k)
        for k in range(max(0, r - n), min(m, r) + 1)
    )


def sum_a172572(n):
    """Six-fold factorial sum for the 3n x 6 array count with row sums 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = factorial
    total = 0
    for c1 in range(n + 1):
        for c2 in range(n - c1 + 1):
            for c3 in range(n - c1 - c2 + 1):
                for c6 in range(min(n - c1, n - c2) + 1):
                    for c7 in range(min(n - c1 - c6, n - c3) + 1):
                        lo = max(0, n - c1 - c2 - c3 - c6 - c7)
                        hi = min(n - c2 - c6, n - c3 - c7)
                        for c10 in range(lo, hi + 1):
                            cs = c1 + c2 + c3 + c6 + c7 + c10
                            args = (
                                n - c1 - c2 - c3,
                                n - c1 - c6 - c7,
                                n - c2 - c6 - c10,
                                n - c3 - c7 - c10,
                                2 * n - cs,
                                cs - n,
                                4 * n - 2 * cs,
                            )
                            if min(args) < 0:
                                continue
                            num = f(3 * n) * f(4 * n - 2 * cs)
                            den = (
                                f(c1) * f(c2) * f(c3) * f(c6) * f(c7)
                                * f(c10)
                                * f(args[0]) * f(args[1]) * f(args[2])
                                * f(args[3])
                                * f(args[4]) ** 2
                                * f(args[5])
                            )
                            total += num // den
    return total


def brute_orthant_n1(s):
    """Walks of 3 steps to (1,...,1): direct enumeration oracle."""
    count = 0
    for triple in product(range(len(s.steps)), repeat=3):
        tot = [0] * 6
        for i in triple:
            for k in range(6):
                tot[k] += s.steps[i][k]
        if tot == [1] * 6:
            count += 1
    return count
