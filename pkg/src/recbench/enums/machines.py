"""Finite-state machines for digit-array sequences.

Currently one inhabitant: arrays v in {0..3}^(n+2) whose second
differences admit a signed combination summing to zero.  The state keeps
the last two entries plus the set of achievable absolute signed sums,
capped at 19 (sums beyond that can never return to zero).
"""

from collections import deque
from itertools import product

from ..ore import Sequence

SUM_BOUND = 19


class A250556Machine:
    """Deterministic machine over states (prev, last, achievable-sums).

    states: list of state tuples, seeds first; trans[i][r] is the index
    of the successor when digit r is appended, or -1 for a dead end;
    accepting[i] is True when 0 is among the achievable sums.
    """

    def __init__(self, states, trans, accepting, n_seeds):
        self.states = states
        self.trans = trans
        self.accepting = accepting
        self.n_seeds = n_seeds

    @property
    def total_states(self):
        return len(self.states)

    @property
    def state_count(self):
        """Transfer-matrix dimension: states hit by at least one transition.

        Eight of the sixteen length-2 seeds can never recur once a digit
        has been appended; they serve as entry points only and are not
        counted here.
        """
        core = set()
        for row in self.trans:
            for j in row:
                if j >= 0:
                    core.add(j)
        return len(core)


def build_a250556_machine(bound=SUM_BOUND):
    """Breadth-first closure from the 16 length-2 seed states."""
    seeds = [
        (p, q, frozenset([0])) for p in range(4) for q in range(4)
    ]
    index = {st: i for i, st in enumerate(seeds)}
    states = list(seeds)
    rows = {}
    queue = deque(seeds)
    while queue:
        p, q, S = st = queue.popleft()
        row = []
        for r in range(4):
            delta = p - 2 * q + r
            S2 = set()
            for s in S:
                a = abs(s + delta)
                if a <= bound:
                    S2.add(a)
                b = abs(s - delta)
                if b <= bound:
                    S2.add(b)
            if not S2:
                row.append(-1)
                continue
            nst = (q, r, frozenset(S2))
            if nst not in index:
                index[nst] = len(states)
                states.append(nst)
                queue.append(nst)
            row.append(index[nst])
        rows[index[st]] = row
    trans = [rows[i] for i in range(len(states))]
    accepting = [0 in st[2] for st in states]
    return A250556Machine(states, trans, accepting, len(seeds))


def gen_a250556(n_max, machine=None):
    """First n_max terms: counts of accepted arrays of length n+2."""
    if machine is None:
        machine = build_a250556_machine()
    counts = [0] * machine.total_states
    for i in range(machine.n_seeds):
        counts[i] = 1
    trans = machine.trans
    accepting = machine.accepting
    out = []
    for _ in range(n_max):
        new = [0] * machine.total_states
        for i, c in enumerate(counts):
            if not c:
                continue
            for j in trans[i]:
                if j >= 0:
                    new[j] += c
        counts = new
        out.append(
            sum(c for c, acc in zip(counts, accepting) if acc)
        )
    return Sequence(1, out)


def brute_a250556(n_max):
    """Direct enumeration over all arrays (oracle, n_max <= ~8).

    For each array, the set of achievable signed sums of the second
    differences is tracked as a bitmask over [-6n, 6n].
    """
    out = []
    for n in range(1, n_max + 1):
        center = 6 * n
        count = 0
        for v in product(range(4), repeat=n + 2):
            mask = 1 << center
            for i in range(n):
                d = abs(v[i] - 2 * v[i + 1] + v[i + 2])
                mask = (mask << d) | (mask >> d)
            if (mask >> center) & 1:
                count += 1
        out.append(count)
    return Sequence(1, out)
