"""Shape analysis of constraint sets.

Interval relations, the constraint graph with its trivial cycle edges,
vertex separation numbers, and the containment tree used by the
matrix-multiplication matcher.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import ConstraintSet, GapConstraint
from .errors import InvalidArgument, TooLarge
from .semilinear import SemilinearSet

DEFAULT_M_LIMIT = 20


class Relation(enum.Enum):
    EQUAL = "Equal"
    CONTAINS = "Contains"
    CONTAINED_IN = "ContainedIn"
    INTERSECTS = "Intersects"
    DISJOINT = "Disjoint"


def interval(c) -> tuple[int, int]:
    return (c.i, c.j - 1)


def relation(c, d) -> Relation:
    (a, b), (x, y) = interval(c), interval(d)
    if (a, b) == (x, y):
        return Relation.EQUAL
    if b < x or y < a:
        return Relation.DISJOINT
    if a <= x and y <= b:
        return Relation.CONTAINS
    if x <= a and b <= y:
        return Relation.CONTAINED_IN
    return Relation.INTERSECTS


def find_intersecting_pair(cs):
    """The first pair of constraints that intersect, or None."""
    items = list(cs)
    for u in range(len(items)):
        for v in range(u + 1, len(items)):
            if relation(items[u], items[v]) is Relation.INTERSECTS:
                return items[u], items[v]
    return None


def is_non_intersecting(cs) -> bool:
    return find_intersecting_pair(cs) is None


# -- constraint graph ---------------------------------------------------------

def consecutive_label(i: int) -> GapConstraint:
    """Trivial label on ``(i, i+1)``: any gap content."""
    return GapConstraint(i, i + 1, SemilinearSet.at_least(0))


def closing_label(m: int) -> GapConstraint:
    """Trivial label on ``(1, m)``: the gap spans the ``m - 2`` inner images."""
    return GapConstraint(1, m, SemilinearSet.at_least(m - 2))


@dataclass(frozen=True)
class ConstraintGraph:
    m: int
    labels: dict  # (a, b) -> GapConstraint, a < b
    trivial: frozenset  # pairs whose label is a trivial filler

    @property
    def edges(self) -> frozenset:
        return frozenset(self.labels)

    def neighbours(self) -> list[set[int]]:
        adj = [set() for _ in range(self.m + 1)]
        for a, b in self.labels:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def build_graph(m: int, cs) -> ConstraintGraph:
    if m < 2:
        raise InvalidArgument("the constraint graph needs m >= 2")
    labels = {}
    for c in cs:
        if c.j > m:
            raise InvalidArgument(f"constraint ({c.i}, {c.j}) exceeds m = {m}")
        labels[c.pair] = c
    trivial = set()
    for i in range(1, m):
        if (i, i + 1) not in labels:
            labels[(i, i + 1)] = consecutive_label(i)
            trivial.add((i, i + 1))
    if (1, m) not in labels:
        labels[(1, m)] = closing_label(m)
        trivial.add((1, m))
    return ConstraintGraph(m, labels, frozenset(trivial))


# -- vertex separation --------------------------------------------------------

@dataclass(frozen=True)
class VsnReport:
    ordering: tuple[int, ...]
    vsn: int
    optimal: bool


def _edge_list(g) -> tuple[int, frozenset]:
    if isinstance(g, ConstraintGraph):
        return g.m, g.edges
    m, edges = g
    return m, frozenset(tuple(sorted(e)) for e in edges)


def vsn_of_ordering(g, order) -> int:
    """Largest number of already-placed vertices that still have an unplaced neighbour.

    ``g`` is a ``ConstraintGraph`` or a pair ``(m, edges)`` on vertices ``1..m``.
    """
    m, edges = _edge_list(g)
    order = tuple(order)
    if sorted(order) != list(range(1, m + 1)):
        raise InvalidArgument(f"ordering must permute 1..{m}")
    place = {v: q for q, v in enumerate(order)}
    # vertex v counts at prefix length q iff place[v] < q <= last neighbour place
    last = {v: place[v] for v in order}
    for a, b in edges:
        last[a] = max(last[a], place[b])
        last[b] = max(last[b], place[a])
    width = 0
    for q in range(1, m):
        width = max(width, sum(1 for v in order[:q] if last[v] >= q))
    return width


@lru_cache(maxsize=256)
def _min_vsn(m: int, edges: frozenset) -> tuple[tuple[int, ...], int]:
    full = (1 << m) - 1
    adj = [0] * m
    for a, b in edges:
        adj[a - 1] |= 1 << (b - 1)
        adj[b - 1] |= 1 << (a - 1)
    masks = np.arange(full + 1, dtype=np.int64)
    bnd = np.zeros(full + 1, dtype=np.int64)
    for v in range(m):
        inside = (masks >> v) & 1
        bnd += inside * ((adj[v] & ~masks & full) != 0)
    popcount = np.zeros(full + 1, dtype=np.int64)
    for v in range(m):
        popcount += (masks >> v) & 1

    big = m + 1
    f = np.full(full + 1, big, dtype=np.int64)
    last = np.full(full + 1, -1, dtype=np.int64)
    f[0] = 0
    for size in range(1, m + 1):
        layer = masks[popcount == size]
        best = np.full(len(layer), big, dtype=np.int64)
        arg = np.full(len(layer), -1, dtype=np.int64)
        for v in range(m):
            has = ((layer >> v) & 1).astype(bool)
            cand = np.full(len(layer), big, dtype=np.int64)
            cand[has] = f[layer[has] ^ (1 << v)]
            better = cand < best
            best[better] = cand[better]
            arg[better] = v
        f[layer] = np.maximum(best, bnd[layer])
        last[layer] = arg

    order, s = [], full
    while s:
        v = int(last[s])
        order.append(v + 1)
        s ^= 1 << v
    return tuple(reversed(order)), int(f[full])


def min_vsn_ordering(g, m_limit: int = DEFAULT_M_LIMIT) -> VsnReport:
    """Exact minimum over all orderings by dynamic programming on vertex subsets."""
    m, edges = _edge_list(g)
    if m > m_limit:
        raise TooLarge(f"subset DP limited to m <= {m_limit}, got {m}")
    order, width = _min_vsn(m, edges)
    return VsnReport(order, width, True)


def vsn_report(g, m_limit: int = DEFAULT_M_LIMIT) -> VsnReport:
    """Optimal report when affordable, otherwise the natural ordering."""
    try:
        return min_vsn_ordering(g, m_limit)
    except TooLarge:
        m, _ = _edge_list(g)
        natural = tuple(range(1, m + 1))
        return VsnReport(natural, vsn_of_ordering(g, natural), False)


# -- containment tree ---------------------------------------------------------

def root(cs, m: int) -> int:
    """1-based index of the ``(1, m)`` constraint in ``cs``, or 0 if there is none."""
    for k, c in enumerate(cs, start=1):
        if c.pair == (1, m):
            return k
    return 0


def synthetic_root(m: int) -> GapConstraint:
    # on any table over [0, n] this coincides with the length range [m-2, n]
    return GapConstraint(1, m, SemilinearSet.at_least(m - 2))


def preorder_key(c):
    return (c.i, -c.j)


def preorder_lt(c, d) -> bool:
    if c.pair == d.pair:
        raise InvalidArgument(f"preorder is undefined on equal pairs {c.pair}")
    return c.i < d.i or (c.i <= d.i and d.j < c.j)


@dataclass(frozen=True)
class ConstraintTree:
    """Node 0 is the root.  ``origin[k]`` is the 1-based index into the source
    constraint set, with 0 marking the synthetic root."""

    nodes: tuple[GapConstraint, ...]
    children: tuple[tuple[int, ...], ...]
    origin: tuple[int, ...]

    @property
    def synthetic(self) -> bool:
        return self.origin[0] == 0

    def depth(self) -> int:
        best, stack = 0, [(0, 0)]
        while stack:
            k, d = stack.pop()
            best = max(best, d)
            stack.extend((c, d + 1) for c in self.children[k])
        return best

    def postorder(self) -> list[int]:
        out, stack = [], [(0, False)]
        while stack:
            k, done = stack.pop()
            if done:
                out.append(k)
                continue
            stack.append((k, True))
            stack.extend((c, False) for c in reversed(self.children[k]))
        return out

    def child_pairs(self, k) -> list[tuple[int, int]]:
        return [self.nodes[c].pair for c in self.children[k]]


def build_tree(cs, m: int) -> ConstraintTree:
    """Hasse diagram of strict interval containment, rooted at ``(1, m)``."""
    cs = list(cs)
    bad = find_intersecting_pair(cs)
    if bad is not None:
        raise InvalidArgument(f"constraints {bad[0].pair} and {bad[1].pair} intersect")
    r = root(cs, m)
    top = cs[r - 1] if r else synthetic_root(m)
    rest = sorted(((c, k) for k, c in enumerate(cs, start=1) if k != r),
                  key=lambda ck: preorder_key(ck[0]))
    nodes = [top] + [c for c, _ in rest]
    origin = [r] + [k for _, k in rest]
    children = [[] for _ in nodes]
    stack = [0]
    for node in range(1, len(nodes)):
        c = nodes[node]
        while nodes[stack[-1]].j < c.j:
            stack.pop()
        children[stack[-1]].append(node)
        stack.append(node)
    return ConstraintTree(tuple(nodes), tuple(map(tuple, children)), tuple(origin))


def analyze(cs, m: int) -> dict:
    """Machine-readable shape summary."""
    cs = ConstraintSet(tuple(cs)) if not isinstance(cs, ConstraintSet) else cs
    bad = find_intersecting_pair(cs)
    out = {"m": m, "K": cs.K, "non_intersecting": bad is None}
    if bad is not None:
        out["intersecting_pair"] = [list(bad[0].pair), list(bad[1].pair)]
    if m >= 2:
        report = vsn_report(build_graph(m, cs))
        out["vsn"] = report.vsn
        out["vsn_optimal"] = report.optimal
        out["ordering"] = list(report.ordering)
        if bad is None:
            tree = build_tree(cs, m)
            out["tree_depth"] = tree.depth()
            out["tree_nodes"] = len(tree.nodes)
            out["synthetic_root"] = tree.synthetic
    return out
