from recbench.enums.machines import (
    A250556Machine,
    brute_a250556,
    build_a250556_machine,
    gen_a250556,
)

# order-17 constant-coefficient recurrence, coefficient of a_{n+i} at index i
A250556_REC = [
    -32, 56, -28, 36, 8, -84, 44, -58, 73, 1, -4, 8, -42, 26, -12, 14, -7, 1,
]

# numerator polynomial N(t) of the closed form F = -2t N(t) / D(t),
# ascending coefficients t^0 .. t^27
A250556_GF_NUM = [
    4, 2, -3, 73, 115, -139, -453, -1231, 38, 406, 3597, 2087, 1666, -3614,
    -4178, -4504, 903, 1985, 4173, 403, -202, -1324, -1296, 684, -300, 508,
    -56, 32,
]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def gf_denominator():
    # (t-1)^3 (t+1)^2 (2t-1) (4t-1) (t^2+1)^2 (2t^3-1)^2
    d = [1]
    for f, k in [
        ([-1, 1], 3),
        ([1, 1], 2),
        ([-1, 2], 1),
        ([-1, 4], 1),
        ([1, 0, 1], 2),
        ([-1, 0, 0, 2], 2),
    ]:
        for _ in range(k):
            d = poly_mul(d, f)
    return d


def gf_series(n_terms):
    """Exact power-series coefficients of -2t N(t) / D(t)."""
    den = gf_denominator()
    num = [0] + [-2 * c for c in A250556_GF_NUM]
    out = []
    for k in range(n_terms + 1):
        v = num[k] if k < len(num) else 0
        v -= sum(den[i] * out[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        q, r = divmod(v, den[0])
        assert r == 0
        out.append(q)
    return out


MACHINE = build_a250556_machine()


def test_state_count():
    assert MACHINE.state_count == 2484


def test_deterministic_rows():
    assert all(len(row) == 4 for row in MACHINE.trans)
    assert isinstance(MACHINE, A250556Machine)


def test_table_terms():
    assert list(gen_a250556(5, MACHINE).terms) == [8, 60, 302, 1516, 7126]


def test_brute_oracle():
    got = list(gen_a250556(5, MACHINE).terms)
    assert list(brute_a250556(5).terms) == got


def test_printed_gf_expansion():
    terms = list(gen_a250556(60, MACHINE).terms)
    series = gf_series(60)
    assert series[0] == 0
    assert series[1:] == terms


def test_recurrence_read_off_denominator():
    den = gf_denominator()
    assert len(den) == 18
    assert A250556_REC == [-den[17 - i] for i in range(18)]


def test_order17_recurrence_annihilates_tail_only():
    terms = list(gen_a250556(117, MACHINE).terms)

    def residual(n):  # n is the 1-based index of a_n
        return sum(
            A250556_REC[i] * terms[n - 1 + i] for i in range(18)
        )

    assert all(residual(n) == 0 for n in range(12, 101))
    assert any(residual(n) != 0 for n in range(1, 12))
