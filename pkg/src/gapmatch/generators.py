"""Reductions from Clique, exact-one 3SAT and 3-OV into matching instances.

Each generator is paired with a brute-force solver of its source problem so
that the compiled instances can be checked end to end.  Random sources take
an explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .automata import Dfa
from .core import Alphabet, GapConstraint, Instance
from .errors import InvalidArgument, TooLarge
from .semilinear import LinearSet, SemilinearSet

# -- source problems ----------------------------------------------------------


@dataclass(frozen=True)
class SourceGraph:
    """Undirected graph on vertices ``1..n`` with every self-loop present."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(int(bool(x)) for x in row) for row in self.adjacency)
        if len(adj) != self.n or any(len(row) != self.n for row in adj):
            raise InvalidArgument("adjacency matrix must be n x n")
        for i in range(self.n):
            if adj[i][i] != 1:
                raise InvalidArgument("every vertex needs a self-loop")
            for j in range(self.n):
                if adj[i][j] != adj[j][i]:
                    raise InvalidArgument("adjacency matrix must be symmetric")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n, edges) -> "SourceGraph":
        adj = [[int(i == j) for j in range(n)] for i in range(n)]
        for u, v in edges:
            adj[u - 1][v - 1] = adj[v - 1][u - 1] = 1
        return cls(n, tuple(map(tuple, adj)))

    def edges(self):
        return [(i + 1, j + 1) for i in range(self.n) for j in range(i + 1, self.n)
                if self.adjacency[i][j]]


@dataclass(frozen=True)
class CnfExact1:
    """Monotone 3-clauses over variables ``1..n``; each clause is sorted ascending."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(sorted(c)) for c in self.clauses)
        for c in clauses:
            if len(c) != 3 or len(set(c)) != 3:
                raise InvalidArgument(f"clause {c} needs three distinct variables")
            if not all(1 <= x <= self.n for x in c):
                raise InvalidArgument(f"clause {c} uses a variable outside 1..{self.n}")
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class OvTriple:
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        sets = [tuple(tuple(int(bool(x)) for x in v) for v in s) for s in (self.A, self.B, self.C)]
        if len({len(s) for s in sets}) != 1 or not sets[0]:
            raise InvalidArgument("A, B and C need the same positive number of vectors")
        dims = {len(v) for s in sets for v in s}
        if len(dims) != 1 or 0 in dims:
            raise InvalidArgument("all vectors need the same positive dimension")
        object.__setattr__(self, "A", sets[0])
        object.__setattr__(self, "B", sets[1])
        object.__setattr__(self, "C", sets[2])

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def d(self) -> int:
        return len(self.A[0])


# -- Clique -------------------------------------------------------------------


def _cell(m, i, j):
    return 1 + m * (i - 1) + j


def gen_clique(g: SourceGraph, k: int, d: int | None = None) -> Instance:
    """``k``-clique as matching ``0 1^(k*k) 0`` against ``0 adj 0``.

    With ``d`` given, the row-span constraints use the single length ``d``
    instead of ``{0} ∪ [n-1]`` (one member of the Turing-reduction family).
    """
    n = g.n
    if not 1 <= k <= n:
        raise InvalidArgument(f"need 1 <= k <= n = {n}, got k = {k}")
    if d is not None and not 0 <= d <= n - 1:
        raise InvalidArgument(f"d must lie in 0..{n - 1}")
    text = "0" + "".join(str(x) for row in g.adjacency for x in row) + "0"
    pattern = "0" + "1" * (k * k) + "0"
    cs = [GapConstraint(1, k * k + 2, SemilinearSet.linear(n * n))]
    for i in range(1, k + 1):
        cs.append(GapConstraint(1, _cell(k, i, i), SemilinearSet.linear(0, n + 1)))
    for i in range(1, k):
        for j in range(1, k + 1):
            cs.append(GapConstraint(_cell(k, i, j), _cell(k, i + 1, j), SemilinearSet.linear(n - 1, n)))
    if k >= 2:
        span = SemilinearSet.finite(range(n)) if d is None else SemilinearSet.linear(d)
        for i in range(1, k + 1):
            cs.append(GapConstraint(_cell(k, i, 1), _cell(k, i, k), span))
    meta = {"source": "clique", "n": n, "k": k, "variant": "direct" if d is None else f"turing({d})"}
    return Instance.from_strings(text, pattern, cs, Alphabet(("0", "1")), meta)


def brute_clique(g: SourceGraph, k: int) -> bool:
    if g.n > 10:
        raise TooLarge("brute_clique is limited to 10 vertices")
    if k > g.n:
        return False
    adj = g.adjacency
    return any(all(adj[u][v] for u, v in combinations(group, 2))
               for group in combinations(range(g.n), k))


# -- exact-one 3SAT -----------------------------------------------------------


def _minimize(state_count, start, accepting, table):
    """Moore partition refinement on the reachable part; undefined stays undefined."""
    reach, todo = {start}, [start]
    while todo:
        q = todo.pop()
        for r in table[q]:
            if r >= 0 and r not in reach:
                reach.add(r)
                todo.append(r)
    states = sorted(reach)
    block = {q: int(q in accepting) for q in states}
    while True:
        sig = {q: (block[q],) + tuple(block[r] if r >= 0 else -1 for r in table[q]) for q in states}
        names = {}
        new = {q: names.setdefault(sig[q], len(names)) for q in states}
        if len(names) == len(set(block.values())):
            break
        block = new
    # renumber with the start block first
    order = {}
    for q in [start] + states:
        order.setdefault(block[q], len(order))
    rows = [None] * len(order)
    for q in states:
        b = order[block[q]]
        rows[b] = tuple(order[block[r]] if r >= 0 else -1 for r in table[q])
    acc = frozenset(order[block[q]] for q in states if q in accepting)
    return Dfa(len(order), 0, acc, tuple(rows))


def rank_dfa(rank: int, alphabet: Alphabet) -> Dfa:
    """Gap language linking a variable block to a clause block.

    The gap starts with ``#`` exactly when the variable is set true, and the
    number of ``b`` after its last ``#`` records which clause member was
    picked.  True must pick member ``rank``; false must pick another one.
    """
    hash_, b = alphabet.symbol("#"), alphabet.symbol("b")
    # states: 0 start, 1 began with b and no # yet, then 2 + 4*f + t for
    # first letter f (1 for #) and trailing b count t saturating at 3
    def at(f, t):
        return 2 + 4 * f + t

    table = [[-1, -1] for _ in range(10)]
    table[0][b], table[0][hash_] = 1, at(1, 0)
    table[1][b], table[1][hash_] = 1, at(0, 0)
    for f in (0, 1):
        for t in range(4):
            table[at(f, t)][hash_] = at(f, 0)
            table[at(f, t)][b] = at(f, min(t + 1, 3))
    picked = rank - 1
    accepting = {at(1, picked)} | {at(0, t) for t in range(3) if t != picked}
    return _minimize(10, 0, accepting, table)


def gen_sat(f: CnfExact1) -> Instance:
    n, m = f.n, f.m
    pattern = "b#" * (n + m)
    text = "bb#" * n + "bbb#" * m
    alpha = Alphabet(("#", "b"))
    dfas = {r: rank_dfa(r, alpha) for r in (1, 2, 3)}
    cs = []
    for j, clause in enumerate(f.clauses, start=1):
        for rank, x in enumerate(clause, start=1):
            cs.append(GapConstraint(2 * x - 1, 2 * n + 2 * j - 1, dfas[rank]))
    meta = {"source": "1in3sat", "n": n, "m": m}
    return Instance.from_strings(text, pattern, cs, alpha, meta)


def brute_1in3(f: CnfExact1) -> bool:
    if f.n > 10:
        raise TooLarge("brute_1in3 is limited to 10 variables")
    for bits in product((0, 1), repeat=f.n):
        if all(sum(bits[x - 1] for x in c) == 1 for c in f.clauses):
            return True
    return False


# -- 3-OV ---------------------------------------------------------------------


def _block_p(v):
    return "@" + "".join("#" + str(x) for x in v) + "$"


def _block_w(v):
    return "@" + "".join("#011" if x == 0 else "#001" for x in v) + "$"


OV_ALPHABET = Alphabet(("#", "$", "0", "1", "@", "§"))


def _union(*parts):
    return SemilinearSet(tuple(LinearSet(x0, tuple(ps)) for x0, *ps in parts))


def gen_ov3(t: OvTriple) -> Instance:
    n, d = t.n, t.d
    zero = (0,) * d
    right_p = "".join(_block_p(a) for a in t.A)
    pattern = right_p[::-1] + "§" + right_p
    w0 = _block_w(zero) * (n - 1)
    right_w = w0 + "#" + "".join(_block_w(b) for b in t.B) + "#" + w0
    left_w = (w0 + "#" + "".join(_block_w(c) for c in t.C) + "#" + w0)[::-1]
    text = left_w + "§" + right_w

    size = 2 * d + 2
    exact0 = _union((0,))
    small = _union((0,), (1,), (2,))
    glue = _union((0,), (1, 2))
    odd = _union((1, 2))
    even = _union((0, 2))
    cs = []
    for i in range(1, n + 1):
        s = n * size + 1 + (i - 1) * size + 1
        sbar = (n - i + 1) * size
        cs.append(GapConstraint(s, s + 1, exact0))
        cs.append(GapConstraint(sbar - 1, sbar, exact0))
        for v in range(1, 2 * d + 1):
            cs.append(GapConstraint(s + v, s + v + 1, small))
            cs.append(GapConstraint(sbar - v - 1, sbar - v, small))
        if i >= 2:
            cs.append(GapConstraint(s - 1, s, glue))
        cs.append(GapConstraint(sbar, s, odd))
        for u in range(1, d + 1):
            if t.A[i - 1][u - 1]:
                cs.append(GapConstraint(sbar - 2 * u, s + 2 * u, even))
    meta = {"source": "ov3", "n": n, "d": d}
    return Instance.from_strings(text, pattern, cs, OV_ALPHABET, meta)


def brute_ov3(t: OvTriple) -> bool:
    if t.n > 6:
        raise TooLarge("brute_ov3 is limited to 6 vectors per set")
    return any(all(x * y * z == 0 for x, y, z in zip(a, b, c))
               for a in t.A for b in t.B for c in t.C)


# -- seeded sources -----------------------------------------------------------


def random_graph(n: int, p: float = 0.5, seed=None) -> SourceGraph:
    rng = random.Random(seed)
    return SourceGraph.from_edges(n, [(u, v) for u, v in combinations(range(1, n + 1), 2)
                                      if rng.random() < p])


def random_cnf(n: int, m: int, seed=None) -> CnfExact1:
    if n < 3:
        raise InvalidArgument("exact-one clauses need at least three variables")
    rng = random.Random(seed)
    return CnfExact1(n, tuple(tuple(sorted(rng.sample(range(1, n + 1), 3))) for _ in range(m)))


def random_ov(n: int, d: int, p: float = 0.5, seed=None) -> OvTriple:
    rng = random.Random(seed)

    def vecs():
        return tuple(tuple(int(rng.random() < p) for _ in range(d)) for _ in range(n))

    return OvTriple(vecs(), vecs(), vecs())
