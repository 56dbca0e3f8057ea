"""Noncommutative algebra of linear recurrence operators in the shift S.

An operator L = p_0(n) + p_1(n)*S + ... + p_r(n)*S^r acts on sequences by
(L a)(n) = sum_i p_i(n) a(n+i), and multiplication follows the commutation
rule S * p(n) = p(n+1) * S.

    >>> L = parse_operator("(-2) + (1)*S")      # S - 2
    >>> a = Sequence(0, [2**k for k in range(8)])
    >>> apply_operator(L, a)
    [Fraction(0, 1), ...]
"""

from fractions import Fraction
from math import gcd

from .exact import UniPoly, poly_gcd


class SingularLeadingCoefficient(Exception):
    """Leading coefficient vanished at a needed index during unrolling."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"leading coefficient vanishes at n={index}")


class NonIntegerTerm(Exception):
    """An unrolled term is not an integer (wrong recurrence or initial data)."""

    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"non-integer term {value} at n={index}")


class Sequence:
    """Integer sequence fragment: explicit offset, exact terms, provenance."""

    PROVENANCES = ("bfile", "generator", "oracle", "unrolled")

    __slots__ = ("offset", "terms", "id", "provenance")

    def __init__(self, offset, terms, id=None, provenance="generator"):
        terms = [int(t) for t in terms]
        if not terms:
            raise ValueError("terms must be nonempty")
        if provenance not in self.PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        self.offset = int(offset)
        self.terms = tuple(terms)
        self.id = id
        self.provenance = provenance

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.offset == other.offset and self.terms == other.terms

    def __repr__(self):
        head = ", ".join(str(t) for t in self.terms[:6])
        more = ", ..." if len(self.terms) > 6 else ""
        return f"Sequence(offset={self.offset}, [{head}{more}], id={self.id})"

    @property
    def last_index(self):
        return self.offset + len(self.terms) - 1

    def term(self, n):
        """Term a_n by sequence index n."""
        i = n - self.offset
        if not 0 <= i < len(self.terms):
            raise IndexError(f"index {n} outside [{self.offset}, {self.last_index}]")
        return self.terms[i]

    def prefix(self, count):
        return Sequence(self.offset, self.terms[:count], self.id, self.provenance)


class ShiftOperator:
    """Recurrence operator sum_i p_i(n) S^i with UniPoly coefficients.

    Construction normalizes to integer, content-free coefficients with the
    leading coefficient of p_r positive.  Polynomial content is never
    cancelled (shared polynomial factors are significant for plausibility
    analysis).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, normalize=True):
        cs = [c if isinstance(c, UniPoly) else UniPoly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            raise ValueError("zero operator")
        if normalize:
            cs = _normalize_coeffs(cs)
        self.coeffs = tuple(cs)

    @classmethod
    def from_int_lists(cls, lists):
        return cls([UniPoly(c) for c in lists])

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def degree(self):
        return max(c.degree for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"parse_operator({format_operator(self)!r})"


def _normalize_coeffs(cs):
    m = 1
    for p in cs:
        for c in p.coeffs:
            m = m * c.denominator // gcd(m, c.denominator)
    ints = [[int(c * m) for c in p.coeffs] for p in cs]
    g = 0
    for row in ints:
        for x in row:
            g = gcd(g, abs(x))
    if g > 1:
        ints = [[x // g for x in row] for row in ints]
    if ints[-1] and ints[-1][-1] < 0:
        ints = [[-x for x in row] for row in ints]
    return [UniPoly(row) for row in ints]


def apply_operator(L, a, window=None):
    """Evaluate sum_i p_i(n) a_{n+i} for n in window (default: full range)."""
    lo = a.offset
    hi = a.offset + len(a) - L.order - 1
    if window is None:
        window = range(lo, hi + 1)
    out = []
    for n in window:
        if n < lo or n > hi:
            raise ValueError(f"window index {n} out of range [{lo}, {hi}]")
        out.append(
            sum((p(n) * a.term(n + i) for i, p in enumerate(L.coeffs)), Fraction(0))
        )
    return out


def annihilates(L, a, window=None):
    return all(v == 0 for v in apply_operator(L, a, window))


def multiply(M, L):
    """Operator product ML, using S^i * p(n) = p(n+i) * S^i."""
    out = [UniPoly.zero() for _ in range(M.order + L.order + 1)]
    for i, p in enumerate(M.coeffs):
        if p.is_zero():
            continue
        for j, q in enumerate(L.coeffs):
            if q.is_zero():
                continue
            out[i + j] = out[i + j] + p * q.shift(i)
    return ShiftOperator(out)


# ---------------------------------------------------------------------------
# rational-function coefficients (internal carrier for right division)


class RatF:
    """Rational function in n: num/den with UniPoly parts, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = UniPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
        if num.is_zero():
            den = UniPoly.one()
        else:
            lead = den.coeffs[-1]
            if lead != 1:
                num = num.scale(Fraction(1) / lead)
                den = den.scale(Fraction(1) / lead)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        return cls(p, UniPoly.one(), reduce=False)

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        return RatF(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        return RatF(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other):
        return RatF(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError
        return RatF(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return RatF(-self.num, self.den, reduce=False)

    def __eq__(self, other):
        return self.num == other.num and self.den == other.den

    def shift(self, k):
        return RatF(self.num.shift(k), self.den.shift(k))

    def __repr__(self):
        return f"RatF({self.num!r}/{self.den!r})"


class RatOperator:
    """Shift operator with rational-function coefficients (division results)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_operator(cls, L):
        return cls([RatF.from_poly(p) for p in L.coeffs])

    @property
    def order(self):
        return len(self.coeffs) - 1  # -1 for the zero operator

    def is_zero(self):
        return not self.coeffs

    def to_shift_operator(self):
        """Clear denominators; valid as a normalized polynomial operator."""
        if self.is_zero():
            raise ValueError("zero operator")
        den = UniPoly.one()
        for c in self.coeffs:
            g = poly_gcd(den, c.den)
            extra, _ = c.den.divmod(g) if g.degree > 0 else (c.den, None)
            den = den * extra
        polys = []
        for c in self.coeffs:
            q, r = (c.num * den).divmod(c.den)
            assert r.is_zero()
            polys.append(q)
        return ShiftOperator(polys)


def right_divide(M, L):
    """Ore right division: M = Q*L + R with order(R) < order(L).

    Q and R are RatOperator values over rational functions in n.
    """
    if not isinstance(L, ShiftOperator) or L.coeffs[-1].is_zero():
        raise ValueError("division by zero operator")
    rem = list(RatOperator.from_operator(M).coeffs)
    rL = L.order
    lead_L = L.coeffs[rL]
    q = [RatF.from_poly(UniPoly.zero()) for _ in range(max(0, M.order - rL) + 1)]
    while len(rem) - 1 >= rL and rem:
        i = len(rem) - 1 - rL
        c = rem[-1] / RatF.from_poly(lead_L.shift(i))
        q[i] = q[i] + c
        for j, p in enumerate(L.coeffs):
            rem[i + j] = rem[i + j] - c * RatF.from_poly(p.shift(i))
        while rem and rem[-1].is_zero():
            rem.pop()
    return RatOperator(q), RatOperator(rem)


def is_right_factor(L, M):
    """True iff right_divide(M, L) has zero remainder."""
    _, r = right_divide(M, L)
    return r.is_zero()


def unroll(L, initial, n_max):
    """Extend initial up to index n_max using a_{n+r} = -sum p_i(n)a_{n+i}/p_r(n).

    Raises SingularLeadingCoefficient when p_r(n)=0 at a needed n and
    NonIntegerTerm when an unrolled value is not an integer.
    """
    r = L.order
    if len(initial) < r:
        raise ValueError(f"need at least {r} initial terms")
    terms = list(initial.terms)
    offset = initial.offset
    lead = L.coeffs[r]
    n = offset + len(terms) - r
    while offset + len(terms) - 1 < n_max:
        lv = lead(n)
        if lv == 0:
            raise SingularLeadingCoefficient(n)
        s = sum(
            (L.coeffs[i](n) * terms[n - offset + i] for i in range(r)),
            Fraction(0),
        )
        val = -s / lv
        if val.denominator != 1:
            raise NonIntegerTerm(n + r, val)
        terms.append(int(val))
        n += 1
    return Sequence(offset, terms, initial.id, provenance="unrolled")


# ---------------------------------------------------------------------------
# textual operator format


def _format_poly(p):
    """Expanded integer polynomial, descending powers, e.g. '2*n^3 - n + 5'."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        assert c.denominator == 1, "operator coefficients must be integral"
        c = c.numerator
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            v = p.var if e == 1 else f"{p.var}^{e}"
            body = v if mag == 1 else f"{mag}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_operator(L):
    """Canonical text form: (p_0) + (p_1)*S + ... + (p_r)*S^r."""
    parts = []
    for i, p in enumerate(L.coeffs):
        if i == 0:
            parts.append(f"({_format_poly(p)})")
        elif i == 1:
            parts.append(f"({_format_poly(p)})*S")
        else:
            parts.append(f"({_format_poly(p)})*S^{i}")
    return " + ".join(parts)


def _parse_poly(text, var="n"):
    """Parse an expanded integer polynomial like '2*n^3 - n + 5'."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    s = text.replace("-", "+-").replace(" ", "")
    coeffs = {}
    for chunk in s.split("+"):
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:]
        if var in chunk:
            head, _, tail = chunk.partition(var)
            coef = 1 if head in ("", "*") else int(head.rstrip("*"))
            if tail.startswith("^"):
                exp = int(tail[1:])
            elif tail == "":
                exp = 1
            else:
                raise ValueError(f"bad monomial {chunk!r}")
        else:
            coef = int(chunk)
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + (-coef if neg else coef)
    top = max(coeffs, default=0)
    return UniPoly([coeffs.get(e, 0) for e in range(top + 1)], var)


def parse_operator(text, var="n"):
    """Parse the canonical operator format back into a ShiftOperator."""
    import re

    chunks = re.findall(r"\(([^()]*)\)(\*S(?:\^(\d+))?)?", text)
    if not chunks:
        raise ValueError(f"malformed operator {text!r}")
    coeffs = {}
    for body, s_part, ptxt in chunks:
        if not s_part:
            power = 0
        elif ptxt:
            power = int(ptxt)
        else:
            power = 1
        if power in coeffs:
            raise ValueError(f"duplicate power S^{power}")
        coeffs[power] = _parse_poly(body, var)
    top = max(coeffs)
    return ShiftOperator(
        [coeffs.get(i, UniPoly.zero(var)) for i in range(top + 1)],
        normalize=False,
    )
