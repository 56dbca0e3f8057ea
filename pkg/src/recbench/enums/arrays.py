"""Array-counting sequences: closed forms, inclusion-exclusion, DPs.

Each generator has a direct brute-force oracle for small n; closed
forms carry their calibrated validity ranges.
"""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import comb

from ..ore import Sequence


# --- binary arrays without 01 diagonally/antidiagonally ------------------

def a188818_even_part(n):
    """Admissible fillings of the even positions (x+y even), n >= 2.

    Counted by generalized Dyck paths separating the 1-region on top
    from the 0-region below; the closed form is a double sum of
    binomial differences plus 2^(n-2).
    """
    if n < 2:
        raise ValueError("closed form valid for n >= 2")
    h = (n + 1) // 2
    return 2 ** (n - 2) + 2 * sum(
        comb(n - 1, n - k - l) - comb(n - 1, n + k - l + 1)
        for k in range(h + 1)
        for l in range(k + 1, h + 1)
    )


def a188818_odd_part(n):
    """Admissible fillings of the odd positions (x+y odd), n >= 2."""
    if n < 2:
        raise ValueError("closed form valid for n >= 2")
    h = n // 2
    return 2 ** (n - 2) + 2 * sum(
        comb(n - 1, n - k - l - 1) - comb(n - 1, n + k - l + 1)
        for k in range(h + 1)
        for l in range(k + 1, h + 1)
    )


def gen_a188818(n_max):
    """n x n binary arrays with no 0 diagonally above a 1.

    The even and odd position classes are independent, so
    a_n = e_n * o_n.  n = 1 is a stored exceptional value (the closed
    forms involve 2^(n-2)).
    """
    terms = [2]
    for n in range(2, n_max + 1):
        terms.append(a188818_even_part(n) * a188818_odd_part(n))
    return Sequence(1, terms[:n_max])


def brute_a188818(n, parity=None):
    """Filter over all 2^(n^2) arrays; forbidden: a[i][j] = 0 with a 1
    directly below-left or below-right.  parity 0/1 restricts the count
    to fillings of cells with (i+j) % 2 == parity only."""
    cells = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if parity is None or (i + j) % 2 == parity
    ]
    count = 0
    for bits in product((0, 1), repeat=len(cells)):
        a = {c: b for c, b in zip(cells, bits)}
        ok = True
        for (i, j), b in a.items():
            if b:
                continue
            for dj in (-1, 1):
                if a.get((i + 1, j + dj)) == 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# --- three-region monotone matrices --------------------------------------

def narayana(i, j):
    """Non-intersecting lattice-walk pairs in an i x j board."""
    return comb(i + j - 1, i) * comb(i + j - 1, i - 1) // (i + j - 1)


def gen_a306322(n_max):
    """n x n matrices over {0,1,2}, m11=0, mnn=2, rows, columns and
    falling diagonals weakly increasing without jumps of 2.

    Counted through pairs of non-intersecting lattice walks separating
    the three value regions; a_0 = 1 is the calibrated boundary term.
    """
    terms = [1]
    for n in range(1, n_max + 1):
        terms.append(_a306322_expression(n))
    return Sequence(0, terms[: n_max + 1])


def _a306322_expression(n):
    total = 0
    for j in range(1, n + 1):
        total += sum(narayana(i, j) for i in range(1, n + 1))
        total += (n - j - 1) * narayana(j, n)
    return 2 * total - 2 * comb(2 * n, n) + narayana(n, n) + 3


def brute_a306322(n):
    """Row-by-row DP directly over the definition (oracle, n <= 7)."""
    if n < 1:
        return 1

    def row_ok(r):
        return all(0 <= b - a <= 1 for a, b in zip(r, r[1:]))

    rows = [r for r in product((0, 1, 2), repeat=n) if row_ok(r)]
    weights = {r: 1 for r in rows if r[0] == 0}
    for _ in range(n - 1):
        new = {}
        for prev, c in weights.items():
            for r in rows:
                if all(0 <= b - a <= 1 for a, b in zip(prev, r)) and all(
                    0 <= b - a <= 1 for a, b in zip(prev, r[1:])
                ):
                    new[r] = new.get(r, 0) + c
        weights = new
    return sum(c for r, c in weights.items() if r[-1] == 2)


# --- triangular array with equal line sums -------------------------------

def gen_a195806(n_max):
    """Size-5 triangular arrays over {0..n} with equal sums for rows and
    diagonals of equal length and zero corners.

    Free cells c21,c22,c31,c32,c41,c44 determine the rest through the
    four equation groups; remaining constraints are checked exactly.
    """
    return Sequence(1, [_a195806_term(n) for n in range(1, n_max + 1)])


def _a195806_term(n):
    rng = range(n + 1)

    def ok(v):
        return 0 <= v <= n

    count = 0
    for c21 in rng:
        for c22 in rng:
            s2 = c21 + c22
            for c41 in rng:
                c52 = s2 - c41
                if not ok(c52):
                    continue
                for c44 in rng:
                    c54 = s2 - c44
                    if not ok(c54):
                        continue
                    for c31 in rng:
                        s3 = c21 + c31 + c41
                        c53 = s3 - c52 - c54
                        if not ok(c53):
                            continue
                        c33 = s3 - c22 - c44
                        if not ok(c33):
                            continue
                        for c32 in rng:
                            c42 = c32 + c33 - c53
                            if not ok(c42):
                                continue
                            c43 = c31 + c32 - c53
                            if not ok(c43):
                                continue
                            s4 = c41 + c42 + c43 + c44
                            if s4 != c22 + c32 + c42 + c52:
                                continue
                            if s4 != c21 + c32 + c43 + c54:
                                continue
                            count += 1
    return count


def brute_a195806(n):
    """Raw enumeration over all {0..n}^12 assignments (oracle, n <= 1)."""
    count = 0
    for c in product(range(n + 1), repeat=12):
        (c21, c22, c31, c32, c33, c41, c42, c43, c44, c52, c53, c54) = c
        if not (c21 + c22 == c41 + c52 == c54 + c44):
            continue
        if not (
            c31 + c32 + c33 == c31 + c42 + c53 == c33 + c43 + c53
        ):
            continue
        if not (
            c41 + c42 + c43 + c44
            == c22 + c32 + c42 + c52
            == c21 + c32 + c43 + c54
        ):
            continue
        if not (
            c21 + c31 + c41 == c52 + c53 + c54 == c22 + c33 + c44
        ):
            continue
        count += 1
    return count


# --- monotone hexagonal arrays -------------------------------------------

A216940_ROWS = (4, 5, 6, 7, 6, 5, 4)


def gen_a216940(n_max):
    """Size-4 hexagonal arrays over {0..n}, entries nondecreasing
    towards east, south-west and south-east.

    Row-by-row DP; the adjacent-row dominance conditions reduce to
    componentwise lower bounds, resolved with multidimensional prefix
    sums over the (n+1)^L value grid.
    """
    return Sequence(1, [_a216940_term(n) for n in range(1, n_max + 1)])


def _a216940_term(n):
    base = n + 1
    L = A216940_ROWS[0]
    w = [0] * (base ** L)
    for q in combinations_with_replacement(range(base), L):
        w[_grid_index(q, base)] = 1
    for prev_len, cur_len in zip(A216940_ROWS, A216940_ROWS[1:]):
        p = _prefix_sums(w, base, prev_len)
        w = [0] * (base ** cur_len)
        for q in combinations_with_replacement(range(base), cur_len):
            if cur_len > prev_len:
                t = q[:prev_len]
            else:
                t = (q[0], q[0]) + q[1 : prev_len - 1]
            w[_grid_index(q, base)] = p[_grid_index(t, base)]
    return sum(w)


def _grid_index(t, base):
    idx = 0
    for v in t:
        idx = idx * base + v
    return idx


def _prefix_sums(w, base, dims):
    """In-place cumulative sums along every axis of a flat grid."""
    w = list(w)
    stride = 1
    for _ in range(dims):
        block = stride * base
        for start in range(0, len(w), block):
            for i in range(start + stride, start + block):
                w[i] += w[i - stride]
        stride = block
    return w


def brute_a216940(n):
    """Direct filter over all hexagon fillings (oracle, n = 1)."""
    rows_lens = A216940_ROWS
    count = 0
    choices = [
        list(combinations_with_replacement(range(n + 1), L))
        for L in rows_lens
    ]

    def fill(y, rows):
        nonlocal count
        if y == len(rows_lens):
            count += 1
            return
        for q in choices[y]:
            if rows:
                p = rows[-1]
                if len(q) > len(p):
                    ok = all(q[x] >= p[x] for x in range(len(p)))
                else:
                    ok = all(q[x] >= p[x + 1] for x in range(len(q)))
                if not ok:
                    continue
            fill(y + 1, rows + [q])

    fill(0, [])
    return count


# --- six points with no three on a line ----------------------------------

def a194478_part(i, n):
    """The inclusion-exclusion part a^(i)(n, 6) for i in 0..3."""
    T = comb(n + 1, 2)
    if i == 0:
        return comb(T, 6)
    if i == 1:
        return 3 * sum(
            comb(ii, j) * comb(T - ii, 6 - j)
            for j in range(3, 7)
            for ii in range(1, n + 1)
        )
    if i == 2:
        # parallel lines (same orientation, j < i) and non-parallel
        # disjoint lines (i + j <= n) are distinct cases; summing the
        # first over j <= n - i instead loses the parallel pairs
        total = 3 * sum(
            comb(ii, 3) * comb(j, 3)
            for ii in range(1, n + 1)
            for j in range(1, ii)
        )
        total += 3 * sum(
            comb(ii, 3) * comb(j, 3)
            for ii in range(1, n + 1)
            for j in range(1, n - ii + 1)
        )
        total += 3 * sum(
            comb(ii - 1, 3) * comb(j - 1, 3)
            for ii in range(1, n + 1)
            for j in range(n - ii + 1, n + 1)
        )
        total += 3 * sum(
            comb(ii - 1, 2) * comb(j - 1, 2) * (T - ii - j + 1)
            + comb(ii - 1, 3) * comb(j - 1, 2)
            + comb(ii - 1, 2) * comb(j - 1, 3)
            for ii in range(1, n + 1)
            for j in range(n - ii + 1, n + 1)
        )
        return total
    if i == 3:
        total = 0
        for ii in range(3, n + 1):
            for j in range(n - ii + 1, n + 1):
                inner = sum(
                    l - 2
                    for l in range(
                        n - min(ii, j) + 1, 2 * n - (ii + j) + 1
                    )
                )
                inner += sum(
                    l - 2 for l in range(2 * n + 2 - (ii + j), n + 1)
                )
                total += (ii - 2) * (j - 2) * inner
        return total
    raise ValueError("part index must be in 0..3")


def gen_a194478(n_max):
    """Placements of 6 points on a size-n triangle with no three in a
    common row or diagonal, by inclusion-exclusion over bad lines."""
    return Sequence(
        1,
        [
            sum((-1) ** i * a194478_part(i, n) for i in range(4))
            for n in range(1, n_max + 1)
        ],
    )


def triangle_lines(n):
    """Rows and both diagonal directions of the size-n triangle."""
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, r + 1)]
    lines = []
    for r in range(1, n + 1):
        lines.append([(r, c) for c in range(1, r + 1)])
    for c in range(1, n + 1):
        lines.append([(r, c) for r in range(c, n + 1)])
    for d in range(0, n):
        lines.append([(r, r - d) for r in range(d + 1, n + 1)])
    return cells, lines


def brute_a194478(n):
    """Direct filter over all 6-subsets of the triangle (oracle, n <= 5)."""
    cells, lines = triangle_lines(n)
    line_sets = [set(l) for l in lines]
    count = 0
    for pick in combinations(cells, 6):
        s = set(pick)
        if all(len(s & l) < 3 for l in line_sets):
            count += 1
    return count


# --- graphs with binary-tree degree sequence -----------------------------

def gen_a339987(n_max):
    """Labeled simple graphs on 2n vertices with n-1 vertices of degree
    3 and n+1 of degree 1.

    The degree multiset can be assigned to labels in C(2n, n-1) ways;
    graphs per assignment are counted by repeatedly connecting a vertex
    of maximum residual degree.
    """
    return Sequence(1, [_a339987_term(n) for n in range(1, n_max + 1)])


@lru_cache(maxsize=None)
def _graph_count(c1, c2, c3):
    if c1 == c2 == c3 == 0:
        return 1
    counts = [c1, c2, c3]
    d = 3 if c3 else (2 if c2 else 1)
    counts[d - 1] -= 1
    total = 0
    for k3 in range(min(d, counts[2]) + 1):
        for k2 in range(min(d - k3, counts[1]) + 1):
            k1 = d - k3 - k2
            if k1 > counts[0]:
                continue
            ways = (
                comb(counts[2], k3)
                * comb(counts[1], k2)
                * comb(counts[0], k1)
            )
            nxt = (
                counts[0] - k1 + k2,
                counts[1] - k2 + k3,
                counts[2] - k3,
            )
            total += ways * _graph_count(*nxt)
    return total


def _a339987_term(n):
    return comb(2 * n, n - 1) * _graph_count(n + 1, 0, n - 1)


def brute_a339987(n):
    """All graphs on 2n labeled vertices, filtered by degree multiset
    (oracle, n <= 3)."""
    v = 2 * n
    pairs = list(combinations(range(v), 2))
    want = sorted([3] * (n - 1) + [1] * (n + 1))
    count = 0
    for bits in product((0, 1), repeat=len(pairs)):
        deg = [0] * v
        for b, (a, c) in zip(bits, pairs):
            if b:
                deg[a] += 1
                deg[c] += 1
        if sorted(deg) == want:
            count += 1
    return count


# --- GF(2) matrices with lex-ordered rows --------------------------------

def a181280_conditions(rows, n):
    """Check the two lexicographic conditions for 4 rows of width n."""
    if not all(rows[i] < rows[i + 1] for i in range(3)):
        return False
    gram = []
    for i in range(4):
        r = 0
        for j in range(4):
            bit = bin(rows[i] & rows[j]).count("1") & 1
            r = (r << 1) | bit
        gram.append(r)
    return all(gram[i] > gram[i + 1] for i in range(3))


def gen_a181280(n_max):
    """4 x n matrices over GF(2) with lexicographically increasing rows
    and lexicographically decreasing rows of M M^T (oracle-style direct
    count; n_max <= ~6)."""
    terms = []
    for n in range(1, n_max + 1):
        count = 0
        for rows in combinations(range(2 ** n), 4):
            if a181280_conditions(rows, n):
                count += 1
        terms.append(count)
    return Sequence(1, terms)


# --- banded monotone arrays ----------------------------------------------

def a253217_cell_values(i, j, n):
    """Admissible values at 1-based position (i, j).

    The band condition uses 0-based indices (the displayed example has
    value n-3 at the corner, inside {n-3..n-1} only when counting from
    0).
    """
    m = max(i, j) - 1
    vals = [v for v in (m - 2, m - 1, m) if v >= 0]
    if i == j == 1:
        vals = [0]
    if i == j == n:
        vals = [v for v in vals if v == n - 3]
    return vals


def a253217_validate(arr):
    """Check a full n x n array against the cell rules."""
    n = len(arr)
    for i in range(n):
        for j in range(n):
            v = arr[i][j]
            if v not in a253217_cell_values(i + 1, j + 1, n):
                return False
            for di, dj in ((-1, 0), (0, -1), (-1, -1)):
                ii, jj = i + di, j + dj
                if ii >= 0 and jj >= 0 and not 0 <= v - arr[ii][jj] <= 1:
                    return False
    return True


def gen_a253217(n_max):
    """n x n arrays with banded entries, each cell equal to or one more
    than its west, north and north-west neighbors; row-by-row DP."""
    return Sequence(1, [_a253217_term(n) for n in range(1, n_max + 1)])


def _a253217_term(n):
    if n < 3:
        return 0

    def extend_rows(i, prev):
        """All admissible rows i given the previous row (or None)."""
        out = []

        def rec(j, row):
            if j > n:
                out.append(tuple(row))
                return
            for v in a253217_cell_values(i, j, n):
                if row and not 0 <= v - row[-1] <= 1:
                    continue
                if prev is not None:
                    if not 0 <= v - prev[j - 1] <= 1:
                        continue
                    if j > 1 and not 0 <= v - prev[j - 2] <= 1:
                        continue
                row.append(v)
                rec(j + 1, row)
                row.pop()

        rec(1, [])
        return out

    weights = {r: 1 for r in extend_rows(1, None)}
    for i in range(2, n + 1):
        new = {}
        for prev, c in weights.items():
            for r in extend_rows(i, prev):
                new[r] = new.get(r, 0) + c
        weights = new
    return sum(weights.values())


def brute_a253217(n):
    """Cell-by-cell backtracking over the whole array (oracle, n <= 5)."""
    count = 0
    arr = [[0] * n for _ in range(n)]

    def rec(pos):
        nonlocal count
        if pos == n * n:
            count += 1
            return
        i, j = divmod(pos, n)
        for v in a253217_cell_values(i + 1, j + 1, n):
            ok = True
            for di, dj in ((-1, 0), (0, -1), (-1, -1)):
                ii, jj = i + di, j + dj
                if ii >= 0 and jj >= 0 and not 0 <= v - arr[ii][jj] <= 1:
                    ok = False
                    break
            if ok:
                arr[i][j] = v
                rec(pos + 1)

    rec(0)
    return count


# --- permanents of staircase matrices ------------------------------------

def a098926_matrix(m):
    """The m x m 0/1 matrix with zeros on the two-right-two-down path."""
    a = [[1] * m for _ in range(m)]
    i = j = 0
    a[0][0] = 0
    while True:
        for _ in range(2):
            if j + 1 >= m:
                return a
            j += 1
            a[i][j] = 0
        for _ in range(2):
            if i + 1 >= m:
                return a
            i += 1
            a[i][j] = 0


def permanent(a):
    """Ryser's formula with Gray-code subset updates."""
    m = len(a)
    sums = [0] * m
    total = 0
    prev = 0
    for g in range(1, 2 ** m):
        gray = g ^ (g >> 1)
        diff = gray ^ prev
        col = diff.bit_length() - 1
        sign = 1 if gray & diff else -1
        for i in range(m):
            sums[i] += sign * a[i][col]
        prod = 1
        for s in sums:
            prod *= s
            if not prod:
                break
        total += (-1) ** bin(gray).count("1") * prod
        prev = gray
    return (-1) ** m * total


def gen_a098926(n_max):
    """Permanents of the (n+2) x (n+2) staircase matrices."""
    return Sequence(
        1, [permanent(a098926_matrix(n + 2)) for n in range(1, n_max + 1)]
    )
