"""Semilinear length sets and their precomputed membership tables.

A linear set ``L(x0; x1, ..., xl)`` is ``{x0 + k1*x1 + ... + kl*xl : ki >= 0}``;
a semilinear set is a finite union of linear sets.  Numbers are kept in
their concise form and never expanded into unary representations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument


@dataclass(frozen=True)
class LinearSet:
    offset: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        periods = tuple(int(x) for x in self.periods)
        if self.offset < 0:
            raise InvalidArgument(f"offset must be non-negative, got {self.offset}")
        if any(x <= 0 for x in periods):
            raise InvalidArgument(f"periods must be positive, got {periods}")
        if len(set(periods)) != len(periods):
            raise InvalidArgument(f"periods must be pairwise distinct, got {periods}")
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "periods", periods)

    @property
    def size(self) -> int:
        return len(self.periods) + 1

    def __str__(self):
        if not self.periods:
            return f"L({self.offset})"
        return f"L({self.offset}; {', '.join(map(str, self.periods))})"


@dataclass(frozen=True)
class SemilinearSet:
    parts: tuple[LinearSet, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise InvalidArgument("a semilinear set needs at least one linear part")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def linear(cls, offset, *periods) -> "SemilinearSet":
        return cls((LinearSet(offset, tuple(periods)),))

    @classmethod
    def finite(cls, values) -> "SemilinearSet":
        """The finite set ``values`` as a union of singletons."""
        return cls(tuple(LinearSet(v) for v in sorted(set(values))))

    @classmethod
    def at_least(cls, lo) -> "SemilinearSet":
        return cls.linear(lo, 1)

    @classmethod
    def union(cls, *sets: "SemilinearSet") -> "SemilinearSet":
        return cls(tuple(p for s in sets for p in s.parts))

    @property
    def size(self) -> int:
        return sum(p.size for p in self.parts)

    def __str__(self):
        return " ∪ ".join(str(p) for p in self.parts)


def _linear_contains(part: LinearSet, x: int) -> bool:
    rest = x - part.offset
    if rest < 0:
        return False
    if rest == 0:
        return True
    if not part.periods:
        return False
    # coin-problem reachability over [0, rest]
    reach = bytearray(rest + 1)
    reach[0] = 1
    for y in range(rest + 1):
        if reach[y]:
            for d in part.periods:
                if y + d <= rest:
                    reach[y + d] = 1
    return bool(reach[rest])


def contains(s: SemilinearSet, x: int) -> bool:
    """Direct membership test of ``x`` in ``s`` without a precomputed table."""
    if x < 0:
        return False
    return any(_linear_contains(part, x) for part in s.parts)


@dataclass(frozen=True)
class MembershipTable:
    """``bits[x]`` holds ``x in S`` for every ``x`` in ``[0, n]``.

    ``ops`` counts the elementary marking steps spent building the table.
    """

    bits: np.ndarray = field(repr=False)
    ops: int = 0

    @property
    def n(self) -> int:
        return len(self.bits) - 1

    def __eq__(self, other):
        if not isinstance(other, MembershipTable):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    __hash__ = None


def build_table(s: SemilinearSet, n: int) -> MembershipTable:
    """Forward-marking sweep, one pass per linear part, OR-combined."""
    if n < 0:
        raise InvalidArgument(f"table length must be non-negative, got {n}")
    combined = np.zeros(n + 1, dtype=bool)
    ops = 0
    for part in s.parts:
        x0 = part.offset
        if x0 > n:
            continue
        marked = bytearray(n + 1)
        marked[x0] = 1
        for i in range(x0, n + 1):
            ops += 1
            if marked[i]:
                for d in part.periods:
                    ops += 1
                    if i + d <= n:
                        marked[i + d] = 1
        combined |= np.frombuffer(bytes(marked), dtype=np.uint8).astype(bool)
    combined.setflags(write=False)
    return MembershipTable(combined, ops)


def table_query(t: MembershipTable, x: int) -> bool:
    if not 0 <= x <= t.n:
        raise InvalidArgument(f"query {x} outside table range [0, {t.n}]")
    return bool(t.bits[x])


def normalize(s: SemilinearSet, n: int) -> SemilinearSet:
    """Replace ``s`` by ``s ∩ [0, n]`` written as explicit singletons.

    Solvability is unchanged for a text of length ``n``.  Returns the empty-free
    set ``L(n + 1)`` (outside every reachable gap) when nothing survives.
    """
    table = build_table(s, n)
    values = np.flatnonzero(table.bits).tolist()
    if not values:
        return SemilinearSet.linear(n + 1)
    return SemilinearSet.finite(values)
