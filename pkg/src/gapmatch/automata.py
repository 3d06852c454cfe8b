"""Possibly incomplete DFAs and factor-membership tables over a text."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import InvalidArgument

UNDEFINED = -1


@dataclass(frozen=True)
class Dfa:
    """A DFA over the integer alphabet ``0..sigma-1``.

    ``table[q][a]`` is the successor of state ``q`` on symbol ``a`` or
    ``UNDEFINED``; runs that hit an undefined transition reject.
    """

    state_count: int
    start: int
    accepting: frozenset[int]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        accepting = frozenset(int(q) for q in self.accepting)
        table = tuple(tuple(int(t) for t in row) for row in self.table)
        object.__setattr__(self, "accepting", accepting)
        object.__setattr__(self, "table", table)
        if self.state_count < 1:
            raise InvalidArgument("a DFA needs at least one state")
        if not 0 <= self.start < self.state_count:
            raise InvalidArgument(f"start state {self.start} out of range")
        if any(not 0 <= q < self.state_count for q in accepting):
            raise InvalidArgument("accepting states must be valid states")
        if len(table) != self.state_count:
            raise InvalidArgument("transition table must have one row per state")
        widths = {len(row) for row in table}
        if len(widths) > 1:
            raise InvalidArgument("transition table rows must have equal width")
        for row in table:
            for t in row:
                if t != UNDEFINED and not 0 <= t < self.state_count:
                    raise InvalidArgument(f"transition target {t} is not a state")

    @classmethod
    def from_transitions(cls, state_count, start, accepting, transitions, sigma) -> "Dfa":
        """Build from ``(state, symbol, state)`` triples; omitted ones are undefined."""
        rows = [[UNDEFINED] * sigma for _ in range(state_count)]
        for q, a, r in transitions:
            if not 0 <= q < state_count or not 0 <= r < state_count:
                raise InvalidArgument(f"transition ({q}, {a}, {r}) references a missing state")
            if not 0 <= a < sigma:
                raise InvalidArgument(f"transition symbol {a} outside alphabet of size {sigma}")
            if rows[q][a] not in (UNDEFINED, r):
                raise InvalidArgument(f"state {q} has two transitions on symbol {a}")
            rows[q][a] = r
        return cls(state_count, start, frozenset(accepting), tuple(map(tuple, rows)))

    @property
    def sigma(self) -> int:
        return len(self.table[0])

    @property
    def size(self) -> int:
        return self.state_count * max(self.sigma, 1)

    def transitions(self):
        for q, row in enumerate(self.table):
            for a, r in enumerate(row):
                if r != UNDEFINED:
                    yield q, a, r

    @cached_property
    def _dense(self):
        # extra sink row absorbs undefined transitions
        sink = self.state_count
        t = np.array(self.table, dtype=np.int64).reshape(self.state_count, self.sigma)
        t[t == UNDEFINED] = sink
        t = np.vstack([t, np.full((1, self.sigma), sink, dtype=np.int64)])
        acc = np.zeros(self.state_count + 1, dtype=bool)
        acc[list(self.accepting)] = True
        return t, acc

    def __str__(self):
        return f"DFA({self.state_count} states)"


def dfa_accepts(a: Dfa, word) -> bool:
    q = a.start
    for x in word:
        if not 0 <= x < a.sigma:
            raise InvalidArgument(f"symbol {x} outside alphabet of size {a.sigma}")
        q = a.table[q][x]
        if q == UNDEFINED:
            return False
    return q in a.accepting


@dataclass(frozen=True)
class FactorTable:
    """``bits[i-1, j-1]`` records ``w[i..j] in L``; ``epsilon`` covers the empty factor."""

    bits: np.ndarray = field(repr=False)
    epsilon: bool

    @property
    def n(self) -> int:
        return self.bits.shape[0]


def build_factor_table(a: Dfa, w) -> FactorTable:
    """Run ``a`` from every start position of ``w`` at once, recording acceptance."""
    w = np.asarray(w, dtype=np.int64)
    n = len(w)
    if n == 0:
        raise InvalidArgument("factor tables need a non-empty text")
    if w.min() < 0 or w.max() >= a.sigma:
        raise InvalidArgument("text symbol outside the DFA alphabet")
    trans, acc = a._dense
    bits = np.zeros((n, n), dtype=bool)
    cur = np.full(n, a.start, dtype=np.int64)
    for j in range(n):
        live = cur[: j + 1]
        live[:] = trans[live, w[j]]
        bits[: j + 1, j] = acc[live]
    bits.setflags(write=False)
    return FactorTable(bits, a.start in a.accepting)


def factor_query(t: FactorTable, i: int, j: int) -> bool:
    if j == i - 1 and 1 <= i <= t.n + 1:
        return t.epsilon
    if not (1 <= i <= t.n and 1 <= j <= t.n) or j < i:
        raise InvalidArgument(f"factor [{i}, {j}] outside text of length {t.n}")
    return bool(t.bits[i - 1, j - 1])
