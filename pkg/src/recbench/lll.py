"""Exact-integer LLL lattice basis reduction (no floating point).

All-integer variant keeping the Gram-Schmidt data as the integers
d_i = det(Gram_i) and lambda_{i,j} = d_{j+1} * mu_{i,j} (Cohen, Alg. 2.6.7),
so the reduction is exact for arbitrarily large entries.
"""

from fractions import Fraction


class LatticeBasis:
    """List of equal-length integer row vectors forming a lattice basis."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows:
            raise ValueError("empty basis")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged basis")
        self.rows = rows

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, LatticeBasis):
            return NotImplemented
        return self.rows == other.rows


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def lll_reduce(basis, delta=Fraction(3, 4)):
    """LLL-reduce a LatticeBasis with Lovasz parameter delta in (1/4, 1].

    Returns a new LatticeBasis spanning the same lattice, size-reduced
    (|mu_ij| <= 1/2) and satisfying the Lovasz condition.  Raises
    ValueError when the rows are linearly dependent.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must be in (1/4, 1]")
    dn, dd = delta.numerator, delta.denominator

    b = [list(r) for r in basis.rows]
    n = len(b)
    if n == 1:
        return LatticeBasis(b)
    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]
    d[1] = _dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("zero row in basis")

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            bl = b[l]
            bk = b[k]
            for i in range(len(bk)):
                bk[i] -= q * bl[i]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    k = 1
    kmax = 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = _dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise ValueError("linearly dependent rows")
                    d[k + 1] = u
        while True:
            red(k, k - 1)
            # swap when the (integerized) Lovasz condition fails
            if dd * d[k + 1] * d[k - 1] < dn * d[k] * d[k] - dd * lam[k][k - 1] ** 2:
                b[k], b[k - 1] = b[k - 1], b[k]
                for j in range(k - 1):
                    lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
                lm = lam[k][k - 1]
                bb = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
                for i in range(k + 1, kmax + 1):
                    t = lam[i][k]
                    lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
                    lam[i][k - 1] = (bb * t + lm * lam[i][k]) // d[k + 1]
                d[k] = bb
                k = max(1, k - 1)
            else:
                for l in range(k - 2, -1, -1):
                    red(k, l)
                k += 1
                break
    return LatticeBasis(b)


def change_of_basis(original, reduced):
    """Exact integer matrix U with U * original = reduced, plus det(U).

    Used to certify that a reduction preserved the lattice (U integral with
    determinant +-1).  Requires the original rows to be independent.
    """
    n = len(original.rows)
    m = len(original.rows[0])
    # solve U row by row via least-squares-free exact elimination:
    # stack original rows as unknown coordinates
    U = []
    for row in reduced.rows:
        coords = _solve_coords(original.rows, row)
        U.append(coords)
    det = _int_det([list(r) for r in U])
    return U, det


def _solve_coords(rows, target):
    n = len(rows)
    m = len(rows[0])
    # Gaussian elimination on the transposed system (m x n), RHS target
    A = [[Fraction(rows[j][i]) for j in range(n)] for i in range(m)]
    rhs = [Fraction(x) for x in target]
    piv = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        rhs[r], rhs[pr] = rhs[pr], rhs[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        rhs[r] *= inv
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                rhs[i] -= f * rhs[r]
        piv.append(c)
        r += 1
    coords = [Fraction(0)] * n
    for i, c in enumerate(piv):
        coords[c] = rhs[i]
    # consistency check
    for i in range(m):
        if sum(Fraction(rows[j][i]) * coords[j] for j in range(n)) != target[i]:
            raise ValueError("target not in row span")
    if any(x.denominator != 1 for x in coords):
        raise ValueError("non-integral coordinates")
    return [int(x) for x in coords]


def _int_det(M):
    n = len(M)
    M = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    assert det.denominator == 1
    return int(det)
