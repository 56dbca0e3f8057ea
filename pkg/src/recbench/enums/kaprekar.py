"""The Kaprekar map and its 3-cycles.

The map sends a decimal integer to (digits sorted descending) minus
(digits sorted ascending).  Counting 3-cycles among n-digit integers
only requires looking at the map's image, which is parameterized by the
nonincreasing vectors of digit differences e_i = d_i - d_(n+1-i).
"""

from itertools import combinations_with_replacement

from ..ore import Sequence


def kaprekar_map(x):
    """Digit-sort-descending minus digit-sort-ascending.

    The input is read without leading zeros, i.e. with its natural
    digit count; outputs may have fewer digits than the input.
    """
    s = sorted(str(x))
    return int("".join(reversed(s))) - int("".join(s))


def image_values(n):
    """All values K(x) over n-digit integers x, each exactly once.

    K(x) depends only on the sorted digits d_1 >= ... >= d_n of x and
    equals sum e_i (10^(n-i) - 10^(i-1)) with e_i = d_i - d_(n+1-i),
    a nonincreasing vector of length floor(n/2) over {0..9}; every such
    vector is realized (pad e with zeros to a digit string).
    """
    k = n // 2
    weights = [10 ** (n - i) - 10 ** (i - 1) for i in range(1, k + 1)]
    out = set()
    for e in combinations_with_replacement(range(9, -1, -1), k):
        out.add(sum(w * v for w, v in zip(weights, e)))
    return out


def gen_a164735(n_max):
    """3-cycles of the Kaprekar map among n-digit integers.

    A member of such a cycle is the image of an n-digit integer, and a
    cycle member with fewer than n digits could never return (the map
    never increases the digit count), so it suffices to search the
    image set restricted to n digits.  Each cycle is counted once.
    """
    return Sequence(1, [_a164735_term(n) for n in range(1, n_max + 1)])


def _a164735_term(n):
    lo, hi = 10 ** (n - 1), 10 ** n
    members = 0
    for y in image_values(n):
        if not lo <= y < hi:
            continue
        y1 = kaprekar_map(y)
        if y1 == y:
            continue
        if kaprekar_map(kaprekar_map(y1)) == y:
            members += 1
    assert members % 3 == 0
    return members // 3


def brute_a164735(n):
    """3-cycles by following the map from every n-digit integer.

    Vectorized over numpy; oracle for n <= 7.
    """
    import numpy as np

    hi = 10 ** n
    x = np.arange(hi, dtype=np.int64)
    k = np.zeros(hi, dtype=np.int64)
    # the map value depends on the natural digit count of each integer
    for m in range(1, n + 1):
        lo_m, hi_m = (10 ** (m - 1) if m > 1 else 0), 10 ** m
        xs = np.arange(lo_m, hi_m, dtype=np.int64)
        digits = np.empty((xs.size, m), dtype=np.int64)
        t = xs.copy()
        for j in range(m - 1, -1, -1):
            digits[:, j] = t % 10
            t //= 10
        digits.sort(axis=1)
        powers = 10 ** np.arange(m - 1, -1, -1, dtype=np.int64)
        asc = digits @ powers
        desc = digits[:, ::-1] @ powers
        k[lo_m:hi_m] = desc - asc
    members = np.count_nonzero(
        (x >= hi // 10) & (k[k[k]] == x) & (k != x)
    )
    assert members % 3 == 0
    return members // 3


def x_pattern(m, a, b, c, d, e):
    """The first 3-cycle pattern, in word notation:
    9^e 8^m 7^d 6^m 5^c 4^m 3^b 2^m 1^a 0 9^m 8^(a+1) 7^m 6^b 5^m 4^c
    3^m 2^d 1^m 0^(e-1) 1."""
    if not (m >= 0 and a >= 0 and b >= 0 and c >= 1 and d >= 1 and e >= 1):
        raise ValueError("need m,a,b >= 0 and c,d,e >= 1")
    word = (
        "9" * e + "8" * m + "7" * d + "6" * m + "5" * c + "4" * m
        + "3" * b + "2" * m + "1" * a + "0" + "9" * m + "8" * (a + 1)
        + "7" * m + "6" * b + "5" * m + "4" * c + "3" * m + "2" * d
        + "1" * m + "0" * (e - 1) + "1"
    )
    return int(word)


def x_pattern_digits(m, a, b, c, d, e):
    return 2 * (a + b + c + d + e + 1) + 9 * m


def y_pattern(a, b, c):
    """The second 3-cycle pattern (even digit counts only):
    6 5^c 4 3^b 1^a 0 8^(a+1) 6^b 5 4^(c+1)."""
    if not (a >= 0 and b >= 1 and c >= 0):
        raise ValueError("need a,c >= 0 and b >= 1")
    word = (
        "6" + "5" * c + "4" + "3" * b + "1" * a + "0" + "8" * (a + 1)
        + "6" * b + "5" + "4" * (c + 1)
    )
    return int(word)
