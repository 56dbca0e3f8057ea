"""Permutation and tableau counters driven by exact recursions.

Covers: multiset permutations over {1..m} with adjacent entries
differing by at most one (m=5 is the five-letter case handled by the
transfer matrix in enums.transfer), partial-sum-capped multiset
permutations, monotone matrix fillings via a Young-diagram growth rule,
and pattern-containing permutations counted through the hook-length
formula.
"""

from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from ..ore import Sequence


def gen_adjacent_permutations(m, n_max):
    """Permutations of n copies of {1..m} with neighbors differing by <= 1.

    Letters are inserted in increasing order; the state tracks how many
    internal gaps between blocks of the current letter must still be
    filled (each such gap must start and end with the next letter) and
    whether the word's two ends are still free.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    terms = [_adjacent_count(m, n) for n in range(1, n_max + 1)]
    return Sequence(0, [1] + terms)


def _adjacent_count(m, n):
    @lru_cache(maxsize=None)
    def f(i, b, fs, fe):
        if i > m:
            return 1 if (b, fs, fe) == (0, 0, 0) else 0
        total = 0
        for mi in range(max(b, 1), n + 1):
            # C(mi-1, b-1) is 0 by convention when b = 0
            ways = comb(n - 1, mi - 1) * (comb(mi - 1, b - 1) if b else 0)
            if not ways:
                continue
            sub = 0
            for s in range(fs + 1):
                for e in range(fe + 1):
                    sub += f(i + 1, mi - b + s + e, s, e)
            total += ways * sub
        return total

    return f(1, 1, 1, 1)


def brute_adjacent_permutations(m, n):
    """Direct filter over all multiset permutations (oracle, small m*n)."""
    word = [v for v in range(1, m + 1) for _ in range(n)]
    return sum(
        1
        for p in set(permutations(word))
        if all(abs(a - b) <= 1 for a, b in zip(p, p[1:]))
    )


def gen_a215570(n_max):
    """Permutations of n copies of {1..5} with kth partial sum <= 3k.

    b(v,w,x,y,z) counts the ways to append the remaining v 1's, w 2's,
    ..., z 5's; the next letter j is admissible when j <= 3 + margin,
    margin = remaining total minus 3 * remaining places.  The empty
    permutation gives a_0 = 1.
    """
    return Sequence(0, [1] + [_a215570_term(n) for n in range(1, n_max + 1)])


def a215570_margin(state):
    v, w, x, y, z = state
    return -2 * v - w + y + 2 * z


def a215570_successors(state):
    """The admissible (letter, reduced state) pairs of the b-recursion."""
    cap = 3 + a215570_margin(state)
    out = []
    for j in range(1, 6):
        if state[j - 1] > 0 and j <= cap:
            nst = list(state)
            nst[j - 1] -= 1
            out.append((j, tuple(nst)))
    return out


def _a215570_term(n):
    @lru_cache(maxsize=None)
    def b(state):
        if state == (0, 0, 0, 0, 0):
            return 1
        return sum(b(nst) for _, nst in a215570_successors(state))

    result = b((n,) * 5)
    b.cache_clear()
    return result


def brute_a215570(n):
    """Direct filter over all multiset permutations (oracle, n <= 2)."""
    word = [v for v in range(1, 6) for _ in range(n)]
    count = 0
    for p in set(permutations(word)):
        tot = 0
        if all((tot := tot + v) <= 3 * (k + 1) for k, v in enumerate(p)):
            count += 1
    return count


def young_growth_successors(state, n):
    """One application of the box-adding rule to a diagram x_state.

    A coordinate may grow when it stays strictly below its predecessor
    minus one or jumps to n-1 (so that no two rows share a length other
    than n); the first coordinate is only capped at n.  The result must
    stay a Young diagram, which matters only in the degenerate case
    n = 1 where the jump clause is vacuously true at 0.
    """
    out = []
    for i, s in enumerate(state):
        if i == 0:
            ok = s < n
        else:
            ok = (s < state[i - 1] - 1 or s == n - 1) and s < state[i - 1]
        if ok:
            nst = list(state)
            nst[i] += 1
            out.append(tuple(nst))
    return out


def gen_young_monotone(k, n_max):
    """(k x n)-matrices filled with 1..kn, all rows, columns, diagonals
    and antidiagonals increasing, counted by growing Young diagrams."""
    if not 2 <= k <= 6:
        raise ValueError("k must be in 2..6")
    return Sequence(1, [_young_term(k, n) for n in range(1, n_max + 1)])


def _young_term(k, n):
    expr = {(0,) * k: 1}
    for _ in range(k * n):
        new = {}
        for state, c in expr.items():
            for nst in young_growth_successors(state, n):
                new[nst] = new.get(nst, 0) + c
        expr = new
    return expr.get((n,) * k, 0)


def gen_a269021(n_max):
    """Permutations of length 2n containing the pattern 1 2 ... n.

    Containment is equivalent to a longest increasing subsequence of
    length >= n; such permutations correspond under the
    Robinson-Schensted bijection to tableau pairs whose shape has first
    part >= n, counted by the hook-length formula.
    """
    return Sequence(0, [_a269021_term(n) for n in range(n_max + 1)])


def _a269021_term(n):
    if n == 0:
        return 1
    total = 0
    # lam = (2n - j, mu) with mu a partition of j <= n; first part is
    # then automatically the largest, and >= n
    for j in range(n + 1):
        for mu in _partitions(j, j):
            lam = (2 * n - j,) + mu
            total += _syt_count(lam) ** 2
    return total


def _partitions(total, max_part):
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _syt_count(lam):
    """Standard Young tableaux of the given shape (hook lengths)."""
    cols = [0] * (lam[0] if lam else 0)
    for row in lam:
        for c in range(row):
            cols[c] += 1
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c) + (cols[c] - r) - 1
    return factorial(sum(lam)) // hooks


def brute_a269021(n):
    """Patience-sorting LIS filter over all of S_2n (oracle, n <= 4)."""
    count = 0
    for p in permutations(range(2 * n)):
        piles = []
        for v in p:
            for i, top in enumerate(piles):
                if top > v:
                    piles[i] = v
                    break
            else:
                piles.append(v)
            if len(piles) >= n:
                count += 1
                break
    return count
