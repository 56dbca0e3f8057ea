"""Exact arithmetic kernel.

Arbitrary-precision integers and rationals (stdlib int / Fraction), dense
univariate polynomials over the rationals, sparse multivariate polynomials
with optional per-variable exponent truncation, rational matrices, and an
exact rational nullspace based on modular images, CRT, and rational
reconstruction.

    >>> p = UniPoly([1, 2])          # 1 + 2n
    >>> p(3)
    Fraction(7, 1)
    >>> nullspace(RatMat.from_rows([[1, 1]]))
    [[1, -1]]
"""

from fractions import Fraction
from math import gcd, isqrt


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients.

    coeffs[i] is the coefficient of var**i; trailing zeros are trimmed, the
    zero polynomial has an empty coefficient list and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var="n"):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def zero(cls, var="n"):
        return cls([], var)

    @classmethod
    def one(cls, var="n"):
        return cls([1], var)

    @classmethod
    def x(cls, var="n"):
        return cls([0, 1], var)

    @classmethod
    def const(cls, c, var="n"):
        return cls([c], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, {self.var!r})"

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other, self.var)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other, self.var)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return UniPoly([x * c for x in self.coeffs], self.var)

    def __pow__(self, k):
        out = UniPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, n):
        val = Fraction(0)
        for c in reversed(self.coeffs):
            val = val * n + c
        return val

    def eval_mod(self, n, p):
        """Evaluate at integer n modulo p (coefficients must be p-regular)."""
        val = 0
        for c in reversed(self.coeffs):
            num = c.numerator % p
            den = pow(c.denominator, -1, p)
            val = (val * n + num * den) % p
        return val

    def shift(self, k):
        """Return the polynomial p(var + k)."""
        if not self.coeffs:
            return self
        # Horner on p(x) with x -> (x + k)
        out = UniPoly.zero(self.var)
        xk = UniPoly([k, 1], self.var)
        for c in reversed(self.coeffs):
            out = out * xk + UniPoly.const(c, self.var)
        return out

    def divmod(self, other):
        """Exact polynomial division with remainder over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and rem:
            c = rem[-1] / lead
            k = len(rem) - 1 - d
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                rem[k + i] -= c * oc
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(q, self.var), UniPoly(rem, self.var)

    def clear_denominators(self):
        """Return (integer-coefficient poly, multiplier m) with m*self integral."""
        m = 1
        for c in self.coeffs:
            m = m * c.denominator // gcd(m, c.denominator)
        return UniPoly([c * m for c in self.coeffs], self.var), m

    def content(self):
        """gcd of integer coefficients (requires integral coefficients)."""
        g = 0
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("content of non-integral polynomial")
            g = gcd(g, abs(c.numerator))
        return g

    def int_roots_in_range(self, lo, hi):
        """Integer roots within [lo, hi] (inclusive) found by direct scan."""
        return [n for n in range(lo, hi + 1) if self(n) == 0]


def poly_gcd(a, b):
    """Monic gcd of two UniPoly over the rationals (primitive PRS)."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        f, _ = a.clear_denominators()
        g, _ = b.clear_denominators()
        f = _primitive(f)
        g = _primitive(g)
        while not g.is_zero():
            _, r = f.divmod(g)
            f, g = g, _primitive(r)
        g = f
    if g.is_zero():
        return g
    return g.scale(Fraction(1, 1) / g.coeffs[-1])


def _primitive(p):
    if p.is_zero():
        return p
    q, _ = p.clear_denominators()
    c = q.content()
    if c > 1:
        q = q.scale(Fraction(1, c))
    if q.coeffs[-1] < 0:
        q = -q
    return q


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MultiPoly:
    """Sparse multivariate polynomial with integer coefficients.

    terms maps exponent tuples to nonzero int coefficients; cap, when set,
    is a per-variable exponent ceiling (int applied to all variables, or a
    tuple) and terms exceeding it are discarded on construction.
    """

    __slots__ = ("terms", "variables", "cap")

    def __init__(self, terms, variables, cap=None):
        self.variables = tuple(variables)
        self.cap = _norm_cap(cap, len(self.variables))
        out = {}
        for exps, c in terms.items():
            if c == 0:
                continue
            exps = tuple(exps)
            if self.cap is not None and any(
                e > m for e, m in zip(exps, self.cap)
            ):
                continue
            out[exps] = c
        self.terms = out

    @classmethod
    def zero(cls, variables, cap=None):
        return cls({}, variables, cap)

    @classmethod
    def const(cls, c, variables, cap=None):
        return cls({(0,) * len(tuple(variables)): c}, variables, cap)

    @classmethod
    def monomial(cls, exps, c, variables, cap=None):
        return cls({tuple(exps): c}, variables, cap)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __repr__(self):
        return f"MultiPoly({self.terms!r}, {self.variables!r})"

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly(out, self.variables, self.cap)

    def __neg__(self):
        return MultiPoly(
            {e: -c for e, c in self.terms.items()}, self.variables, self.cap
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return MultiPoly.zero(self.variables, self.cap)
        return MultiPoly(
            {e: c * v for e, v in self.terms.items()}, self.variables, self.cap
        )

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError(
                f"variable-set mismatch: {self.variables} vs {other.variables}"
            )

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)


def _norm_cap(cap, nvars):
    if cap is None:
        return None
    if isinstance(cap, int):
        return (cap,) * nvars
    return tuple(cap)


def mpoly_mul(p, q, cap=None):
    """Product of two MultiPoly over the same variables.

    Any term with some exponent exceeding cap (per-variable ceiling) is
    discarded; the result is exact otherwise.
    """
    p._check(q)
    capt = _norm_cap(cap, len(p.variables))
    out = {}
    if len(p.terms) > len(q.terms):
        p, q = q, p
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            if capt is not None and any(x > m for x, m in zip(e, capt)):
                continue
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return MultiPoly(out, p.variables, capt)


# ---------------------------------------------------------------------------
# rational matrices and exact nullspace


class RatMat:
    """Dense rectangular matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        if rows <= 0 or cols <= 0:
            raise ValueError("dimensions must be positive")
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry shape mismatch")
        self.rows = rows
        self.cols = cols
        self.entries = [
            [c if isinstance(c, Fraction) else Fraction(c) for c in row]
            for row in entries
        ]

    @classmethod
    def from_rows(cls, rows):
        rows = list(rows)
        return cls(len(rows), len(rows[0]), rows)

    def mul_vec(self, v):
        return [
            sum((a * x for a, x in zip(row, v)), Fraction(0))
            for row in self.entries
        ]


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def word_primes():
    """Deterministic stream of primes just below 2**62, descending."""
    n = (1 << 62) - 1
    while True:
        if _is_probable_prime(n):
            yield n
        n -= 2


def rational_reconstruct(residue, modulus):
    """Lift residue mod modulus to a small rational p/q, or None.

    Returns the Fraction p/q with |p|, q <= sqrt(modulus/2),
    q*residue = p (mod modulus) and gcd(q, modulus) = 1, if one exists.
    """
    if not 0 <= residue < modulus:
        raise ValueError("residue out of range")
    bound = isqrt(modulus // 2)
    r0, r1 = modulus, residue
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if abs(t1) > bound or t1 == 0:
        return None
    if gcd(t1, modulus) != 1:
        return None
    p, q = r1, t1
    if q < 0:
        p, q = -p, -q
    if gcd(abs(p), q) != 1:
        return None
    return Fraction(p, q)


def _int_matrix(A):
    """Clear denominators row-wise; kernel is unchanged."""
    out = []
    for row in A.entries:
        m = 1
        for c in row:
            m = m * c.denominator // gcd(m, c.denominator)
        out.append([int(c * m) for c in row])
    return out


def _kernel_mod_p(M, p):
    """RREF kernel of an integer matrix mod p.

    Returns (pivot_cols tuple, kernel vectors as lists mod p) or None when
    the prime is unusable.
    """
    rows = [[x % p for x in row] for row in M]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [
                    (x - f * y) % p for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    kernel = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][f]) % p
        kernel.append(v)
    return tuple(pivots), kernel


def _normalize_vec(vec):
    """Scale a Fraction vector to primitive ints, leading nonzero positive."""
    m = 1
    for c in vec:
        m = m * c.denominator // gcd(m, c.denominator)
    ints = [int(c * m) for c in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


def nullspace(A, max_primes=40):
    """Basis of the exact right kernel of A, as primitive integer vectors.

    Modular images mod word-size primes are combined by CRT, lifted by
    rational reconstruction, and certified by exact multiplication; the
    empty list means the kernel is trivial.
    """
    M = _int_matrix(A)
    primes = word_primes()
    results = {}  # pivot tuple -> list of (p, kernel)
    used = 0
    while used < max_primes:
        batch = []
        while len(batch) < 3:
            p = next(primes)
            got = _kernel_mod_p(M, p)
            if got is not None:
                batch.append((p, got))
                used += 1
        for p, (piv, ker) in batch:
            results.setdefault(piv, []).append((p, ker))
        # highest rank = most pivots wins (unlucky primes lose rank)
        piv = max(results, key=lambda t: (len(t), results[t][0][0]))
        images = results[piv]
        if not images[0][1]:
            return []
        lifted = _lift_kernel(images)
        if lifted is not None and _certify(M, lifted):
            return lifted
    raise ArithmeticError("nullspace failed to stabilize")


def _lift_kernel(images):
    images = sorted(images)
    nvecs = len(images[0][1])
    ncols = len(images[0][1][0])
    out = []
    for k in range(nvecs):
        vec = []
        for c in range(ncols):
            residue, modulus = 0, 1
            for p, ker in images:
                r = ker[k][c]
                # CRT combine
                h = (r - residue) * pow(modulus % p, -1, p) % p
                residue = residue + modulus * h
                modulus *= p
            f = rational_reconstruct(residue % modulus, modulus)
            if f is None:
                return None
            vec.append(f)
        out.append(_normalize_vec(vec))
    return out


def _certify(M, vectors):
    for v in vectors:
        for row in M:
            if sum(a * x for a, x in zip(row, v)) != 0:
                return False
    return True


def kernel_basis_z(rows):
    """Basis of the saturated integer kernel {x in Z^u : rows . x = 0}.

    Row-reduces [rows^T | I] over Z with euclidean column elimination;
    the identity tails of the rows whose leading block vanished form a
    basis of the full integer kernel lattice (not merely a finite-index
    sublattice, unlike denominator-cleared rational kernel vectors).
    """
    w = len(rows)
    if w == 0:
        raise ValueError("empty matrix")
    u = len(rows[0])
    B = [
        [rows[e][k] for e in range(w)]
        + [1 if i == k else 0 for i in range(u)]
        for k in range(u)
    ]
    row = 0
    for col in range(w):
        while True:
            piv = None
            for i in range(row, u):
                if B[i][col] and (
                    piv is None or abs(B[i][col]) < abs(B[piv][col])
                ):
                    piv = i
            if piv is None:
                break
            B[row], B[piv] = B[piv], B[row]
            done = True
            for i in range(row + 1, u):
                if B[i][col]:
                    q = B[i][col] // B[row][col]
                    B[i] = [x - q * y for x, y in zip(B[i], B[row])]
                    if B[i][col]:
                        done = False
            if done:
                row += 1
                break
    return [r[w:] for r in B[row:]]


def nullspace_bareiss(A):
    """Fraction-free (Bareiss) elimination kernel; oracle for nullspace."""
    M = [row[:] for row in _int_matrix(A)]
    ncols = len(M[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(M)):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        for i in range(r + 1, len(M)):
            M[i] = [
                (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
                for j in range(ncols)
            ]
        prev = M[r][c]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            s = sum(
                Fraction(M[i][j]) * v[j] for j in range(pc + 1, ncols) if v[j]
            )
            v[pc] = -s / M[i][pc]
        kernel.append(_normalize_vec(v))
    return kernel


class NonExactDivision(Exception):
    """An exact integer division failed (wrong rescale factor or stepset)."""

    def __init__(self, numerator, divisor, where=""):
        self.numerator = numerator
        self.divisor = divisor
        super().__init__(
            f"{numerator} not divisible by {divisor}" + (f" at {where}" if where else "")
        )


def divexact(numerator, divisor, where=""):
    q, r = divmod(numerator, divisor)
    if r:
        raise NonExactDivision(numerator, divisor, where)
    return q


def mpoly_divexact(p, q, where=""):
    """Quotient p / q of MultiPoly over Z when the division is exact.

    Lex-ordered long division; raises NonExactDivision as soon as a leading
    term fails to divide, which happens exactly when q does not divide p in
    Z[variables].
    """
    p._check(q)
    if q.is_zero():
        raise NonExactDivision(p, q, where or "division by zero polynomial")
    if p.is_zero():
        return MultiPoly.zero(p.variables, p.cap)
    qe = max(q.terms)  # lex-leading exponent
    qc = q.terms[qe]
    rem = dict(p.terms)
    out = {}
    while rem:
        re = max(rem)
        rc = rem[re]
        ee = tuple(a - b for a, b in zip(re, qe))
        if any(x < 0 for x in ee) or rc % qc:
            raise NonExactDivision(p, q, where)
        cc = rc // qc
        out[ee] = cc
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(ee, e2))
            v = rem.get(e, 0) - cc * c2
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return MultiPoly(out, p.variables, p.cap)
