"""Dynamic program along a vertex ordering of the constraint graph.

Pattern positions are placed in the order ``sigma``.  After ``q`` steps only
the boundary matters: placed positions that still have an unplaced
neighbour.  A state is the tuple of text positions assigned to the
boundary, sorted by pattern position.  Every constraint, including the
trivial consecutive and closing edges, is checked when its second endpoint
is placed, so surviving states at the end certify complete embeddings.
"""

from __future__ import annotations

import time

from ..core import Instance, MatchResult
from ..errors import InvalidArgument
from ..structure import build_graph, vsn_of_ordering, vsn_report
from .tables import GapTables


def boundaries(order, neighbours) -> list[tuple[int, ...]]:
    """``W[q]``: positions among the first ``q`` of ``order`` with a later neighbour."""
    place = {v: q for q, v in enumerate(order)}
    out = []
    for q in range(len(order) + 1):
        placed = order[:q]
        out.append(tuple(sorted(v for v in placed if any(place[u] >= q for u in neighbours[v]))))
    return out


def match_vsn_dp(inst: Instance, order=None) -> MatchResult:
    started = time.perf_counter()
    w, p, m, n = inst.text, inst.pattern, inst.m, inst.n
    if m == 1:
        where = next((x for x, s in enumerate(w, start=1) if s == p[0]), None)
        return MatchResult(where is not None, (where,) if where else None, "vsn-dp",
                           {"vsn": 0, "states": 0, "elapsed": time.perf_counter() - started})

    graph = build_graph(m, inst.constraints)
    if order is None:
        report = vsn_report(graph)
        order, width = report.ordering, report.vsn
    else:
        order = tuple(order)
        if sorted(order) != list(range(1, m + 1)):
            raise InvalidArgument(f"ordering must permute 1..{m}")
        width = vsn_of_ordering(graph, order)

    adj = graph.neighbours()
    W = boundaries(order, adj)
    tables = GapTables(w)
    checks = {pair: tables.checker(c.language) for pair, c in graph.labels.items()}
    occ = {}
    for x, s in enumerate(w, start=1):
        occ.setdefault(s, []).append(x)

    layers = [{(): None}]
    total = 0
    for q in range(m):
        u = order[q]
        prev_w, next_w = W[q], W[q + 1]
        # edges from u back into the boundary, with the test direction fixed
        tests = []
        for slot, v in enumerate(prev_w):
            if v in adj[u]:
                pair = (min(u, v), max(u, v))
                tests.append((slot, v < u, checks[pair]))
        # order prune against every boundary entry
        before = [slot for slot, v in enumerate(prev_w) if v < u]
        after = [slot for slot, v in enumerate(prev_w) if v > u]
        merged = sorted(prev_w + (u,))
        keep = [merged.index(v) for v in next_w]
        insert_at = merged.index(u)
        candidates = occ.get(p[u - 1], [])
        layer = {}
        for key in layers[q]:
            lo = max((key[s] for s in before), default=0)
            hi = min((key[s] for s in after), default=n + 1)
            for j in candidates:
                if j <= lo:
                    continue
                if j >= hi:
                    break
                if not all(chk(key[s], j) if left else chk(j, key[s]) for s, left, chk in tests):
                    continue
                full = key[:insert_at] + (j,) + key[insert_at:]
                new = tuple(full[i] for i in keep)
                if new not in layer:
                    layer[new] = (key, j)
        total += len(layer)
        layers.append(layer)
        if not layer:
            break

    matched = len(layers) == m + 1 and bool(layers[m])
    witness = None
    if matched:
        e = [0] * m
        key = next(iter(layers[m]))
        for q in range(m, 0, -1):
            key, j = layers[q][key]
            e[order[q - 1] - 1] = j
        witness = tuple(e)
    stats = {"vsn": width, "ordering": list(order), "states": total,
             "elapsed": time.perf_counter() - started}
    return MatchResult(matched, witness, "vsn-dp", stats)
