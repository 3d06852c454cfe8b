"""Matching non-intersecting constraint sets with boolean matrix products.

For pattern positions ``s <= t`` a partial embeddings matrix holds at
``(i, j)`` whether ``p[s..t]`` embeds into ``w[i..j]`` with ``s -> i`` and
``t -> j`` while satisfying a given set of constraints.  Children of a
tree node are joined left to right by multiplication, then the node's own
constraint is applied as an elementwise mask.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .. import boolmat
from ..boolmat import BoolMatrix
from ..core import Instance, MatchResult
from ..errors import InvalidArgument, UnsupportedStructure
from ..structure import ConstraintTree, build_tree, find_intersecting_pair
from .tables import GapTables


@dataclass(frozen=True)
class PartialEmbeddingsMatrix:
    s: int
    t: int
    matrix: BoolMatrix
    scope: tuple[tuple[int, int], ...] = ()

    def __getitem__(self, ij) -> bool:
        """1-based entry lookup."""
        i, j = ij
        return self.matrix[i - 1, j - 1]


def bound(w, p, i: int, s: int, t: int):
    """Least ``j >= i`` such that ``p[s..t]`` is a subsequence of ``w[i..j]``, else ``math.inf``."""
    n, m = len(w), len(p)
    if not (1 <= s <= t <= m and 1 <= i <= n):
        raise InvalidArgument(f"need 1 <= s <= t <= {m} and 1 <= i <= {n}")
    x = i
    for r in range(s, t + 1):
        while x <= n and w[x - 1] != p[r - 1]:
            x += 1
        if x > n:
            return math.inf
        if r < t:
            x += 1
    return x


def next_occurrence(w, sigma: int) -> np.ndarray:
    """``nxt[x, a]``: least 0-based ``y >= x`` with ``w[y] == a``, or ``n``; row ``n`` is all ``n``."""
    n = len(w)
    nxt = np.full((n + 2, sigma), n, dtype=np.int64)
    for x in range(n - 1, -1, -1):
        nxt[x] = nxt[x + 1]
        nxt[x, w[x]] = x
    return nxt


def bounds_all(w, p, s: int, t: int, nxt=None) -> np.ndarray:
    """0-based ``bound`` for every 0-based start; ``n`` stands for infinity."""
    w = np.asarray(w, dtype=np.int64)
    n = len(w)
    if nxt is None:
        nxt = next_occurrence(w, int(max(w.max(), max(p))) + 1)
    x = nxt[np.arange(n), p[s - 1]]
    for r in range(s + 1, t + 1):
        x = nxt[np.minimum(x + 1, n), p[r - 1]]
    return x


def build_B_dense(w, p, s: int, t: int, nxt=None) -> np.ndarray:
    w = np.asarray(w, dtype=np.int64)
    n = len(w)
    rows = w == p[s - 1]
    if s == t:
        return np.diag(rows)
    reach = bounds_all(w, p, s, t, nxt)
    cols = w == p[t - 1]
    out = np.arange(n)[None, :] >= reach[:, None]
    out &= rows[:, None]
    out &= cols[None, :]
    return out


def build_B(w, p, s: int, t: int, nxt=None) -> PartialEmbeddingsMatrix:
    if not 1 <= s <= t <= len(p):
        raise InvalidArgument(f"need 1 <= s <= t <= {len(p)}")
    return PartialEmbeddingsMatrix(s, t, BoolMatrix.from_dense(build_B_dense(w, p, s, t, nxt)))


def mask(c, text, tables: GapTables | None = None) -> BoolMatrix:
    """Entry ``(i, j)`` holds iff the gap ``w[i+1..j-1]`` satisfies ``c``."""
    tables = tables or GapTables(text)
    return BoolMatrix.from_dense(tables.mask(c.language))


class _Pipeline:
    def __init__(self, inst: Instance, tree: ConstraintTree):
        self.inst = inst
        self.tree = tree
        self.w = np.asarray(inst.text, dtype=np.int64)
        self.p = inst.pattern
        self.nxt = next_occurrence(inst.text, inst.alphabet.sigma)
        self.tables = GapTables(inst.text)
        self.multiplications = 0
        self._B = {}

    def B(self, s, t) -> BoolMatrix:
        mat = self._B.get((s, t))
        if mat is None:
            mat = self._B[(s, t)] = BoolMatrix.from_dense(build_B_dense(self.w, self.p, s, t, self.nxt))
        return mat

    def mul(self, a, b) -> BoolMatrix:
        self.multiplications += 1
        return boolmat.multiply(a, b)

    def combine(self, k, child_mats) -> BoolMatrix:
        node = self.tree.nodes[k]
        kids = [self.tree.nodes[c] for c in self.tree.children[k]]
        if not kids:
            acc = self.B(node.i, node.j)
        else:
            acc = self.B(node.i, kids[0].i)
            for v, (kid, mat) in enumerate(zip(kids, child_mats)):
                acc = self.mul(acc, mat)
                nxt_start = kids[v + 1].i if v + 1 < len(kids) else node.j
                acc = self.mul(acc, self.B(kid.j, nxt_start))
        return boolmat.and_elementwise(acc, mask(node, self.inst.text, self.tables))

    def compute(self, upto=None) -> dict:
        done = {}
        for k in self.tree.postorder():
            done[k] = self.combine(k, [done[c] for c in self.tree.children[k]])
            if k == upto:
                break
        return done


def _scope(tree, k):
    out, stack = [], [k]
    while stack:
        x = stack.pop()
        if x != 0 or not tree.synthetic:
            out.append(tree.nodes[x].pair)
        stack.extend(tree.children[x])
    return tuple(sorted(out))


def compute_Ak(inst: Instance, tree: ConstraintTree, k: int) -> PartialEmbeddingsMatrix:
    """Partial embeddings matrix of node ``k`` under all constraints in its subtree."""
    pipe = _Pipeline(inst, tree)
    mat = pipe.compute(upto=k)[k]
    node = tree.nodes[k]
    return PartialEmbeddingsMatrix(node.i, node.j, mat, _scope(tree, k))


def match_tree_matmul(inst: Instance) -> MatchResult:
    started = time.perf_counter()
    bad = find_intersecting_pair(inst.constraints)
    if bad is not None:
        raise UnsupportedStructure(f"constraints {bad[0].pair} and {bad[1].pair} intersect")
    if inst.m == 1:
        found = inst.pattern[0] in inst.text
        return MatchResult(found, None, "tree-matmul",
                           {"multiplications": 0, "nodes": 0, "elapsed": time.perf_counter() - started})
    tree = build_tree(inst.constraints, inst.m)
    pipe = _Pipeline(inst, tree)
    top = pipe.compute()[0]
    stats = {
        "multiplications": pipe.multiplications,
        "nodes": len(tree.nodes),
        "non_root_nodes": len(tree.nodes) - 1,
        "synthetic_root": tree.synthetic,
        "elapsed": time.perf_counter() - started,
    }
    return MatchResult(boolmat.any_true(top), None, "tree-matmul", stats)
