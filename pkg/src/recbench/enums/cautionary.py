"""Sequences that stress-test the plausibility checks of guessing.

Two of them are ultimately constant (prime-quotient floors and maximal
Sidon subsets), where a guesser can only resonate the constancy; the
third is a cubic polynomial whose database terms contained an error at
a single index.
"""

from itertools import combinations_with_replacement
from math import isqrt

from ..ore import Sequence


def gen_a237684(n_max):
    """a_n = floor(n * p(n) / sum of the first n primes)."""
    primes = _first_primes(n_max)
    terms = []
    acc = 0
    for n, p in enumerate(primes, start=1):
        acc += p
        terms.append(n * p // acc)
    return Sequence(1, terms)


def _first_primes(count):
    if count < 1:
        return []
    # generous sieve bound: p(n) < n (ln n + ln ln n) for n >= 6
    import math

    bound = 15
    if count >= 6:
        bound = int(count * (math.log(count) + math.log(math.log(count)))) + 10
    while True:
        sieve = bytearray([1]) * (bound + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, int(bound ** 0.5) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        primes = [i for i, b in enumerate(sieve) if b]
        if len(primes) >= count:
            return primes[:count]
        bound *= 2


def _sidon_interval_bound(length):
    """Upper bound on a Sidon set inside an interval of that length:
    sqrt(L) + L^(1/4) + 1 (Erdos-Turan)."""
    if length <= 0:
        return 0
    r = isqrt(length)
    return r + isqrt(r) + 1


def _sidon_exists(k, n, prefix):
    """Is there a size-k subset of {1..n}, containing n, with pairwise
    sums s_i + s_j (i != j) all distinct?  Depth-first over decreasing
    elements; sums are tracked in a bitmask.

    `prefix` holds the already-known answers a(1..m) for some m < n, and
    prunes a branch whenever the elements still to be picked (a Sidon
    set in {1..top}) could not number enough."""

    def cap(top):
        if top <= 0:
            return 0
        if top <= len(prefix):
            return prefix[top - 1]
        return _sidon_interval_bound(top)

    def extend(chosen, sums, compat, size):
        if size == k:
            return True
        top = compat.bit_length() - 1
        if size + min(compat.bit_count(), cap(top)) < k:
            return False
        rest = compat
        while rest:
            v = rest.bit_length() - 1
            rest &= ~(1 << v)
            new = 0
            for c in chosen:
                new |= 1 << (v + c)
            if new.bit_count() == size and not sums & new:
                sums2 = sums | new
                # values below v whose sum with a chosen element would
                # repeat an existing pairwise sum cannot be added later
                compat2 = rest
                chosen.append(v)
                for c in chosen:
                    compat2 &= ~(sums2 >> c)
                if extend(chosen, sums2, compat2, size + 1):
                    return True
                chosen.pop()
        return False

    # bit u of compat = "u may still join the set"; start with 1..n-1
    return extend([n], 0, (1 << n) - 2, 1)


def max_sidon_subset(n, prefix=()):
    """Size of the largest subset of {1..n} with pairwise-distinct sums
    s_i + s_j (i != j).

    `prefix` is the (possibly empty) list of answers for 1..m, m < n.
    When it reaches n - 1 the search only has to settle one candidate
    size: a maximal set either avoids n (size a(n-1)) or contains it."""
    if n == 1:
        return 1
    best = max(1, prefix[n - 2] if len(prefix) >= n - 1 else 0)
    while _sidon_exists(best + 1, n, prefix):
        best += 1
    return best


def gen_a039836(n_max):
    """Maximal Sidon subset sizes of {1..n}.

    Computed in increasing n so the known prefix both seeds and prunes
    each search (the sequence is nondecreasing, growing by at most 1)."""
    terms = []
    for n in range(1, n_max + 1):
        terms.append(max_sidon_subset(n, terms))
    return Sequence(1, terms)


def a187990_closed_form(n):
    """(n^3 + 39 n^2 + 260 n + 402) / 6, exact for all n >= 1."""
    v = n ** 3 + 39 * n ** 2 + 260 * n + 402
    assert v % 6 == 0
    return v // 6


def gen_a187990(n_max):
    return Sequence(1, [a187990_closed_form(n) for n in range(1, n_max + 1)])


def brute_a187990(n):
    """Nondecreasing 6-tuples over {-n-4..n+4} with signed power sum 0,
    sign(0) = 1 (oracle, n <= 6)."""
    lo, hi = -n - 4, n + 4
    count = 0
    for t in combinations_with_replacement(range(lo, hi + 1), 6):
        s = 0
        for x in t:
            if x >= 0:
                s += 2 ** x
            else:
                s -= 2 ** (-x)
        if s == 0:
            count += 1
    return count


def gen_cautionary(seq_id, n_max):
    """Dispatch by id for the three cautionary sequences."""
    table = {
        "A237684": gen_a237684,
        "A039836": gen_a039836,
        "A187990": gen_a187990,
    }
    if seq_id not in table:
        raise KeyError(seq_id)
    return table[seq_id](n_max)
