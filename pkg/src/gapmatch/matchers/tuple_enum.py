"""Endpoint enumeration for small sets of semilinear constraints.

Only the pattern positions that carry a constraint endpoint are pinned.
Their text positions are enumerated left to right; constraints are tested
as soon as both endpoints are pinned, and each unconstrained segment in
between is filled greedily.  With ``K`` constraints at most ``2K``
positions are pinned, so the search is polynomial for fixed ``K``.
"""

from __future__ import annotations

import time
from bisect import bisect_right

from ..core import Instance, MatchResult, _latest_positions, greedy_embedding
from ..errors import TooLarge, UnsupportedConstraint
from .tables import GapTables

DEFAULT_K_LIMIT = 3


def _fill(w, p, lo, hi, first, last):
    """Leftmost embedding of ``p[first..last]`` strictly inside ``(lo, hi)``, or None."""
    out, x = [], lo + 1
    for t in range(first, last + 1):
        while x < hi and w[x - 1] != p[t - 1]:
            x += 1
        if x >= hi:
            return None
        out.append(x)
        x += 1
    return out


def match_tuple_enum(inst: Instance, k_limit: int = DEFAULT_K_LIMIT) -> MatchResult:
    started = time.perf_counter()
    cs = inst.constraints
    if not cs.all_semilinear:
        raise UnsupportedConstraint("tuple enumeration handles semilinear constraints only")
    if cs.K > k_limit:
        raise TooLarge(f"tuple enumeration is limited to K <= {k_limit}, got {cs.K}")
    w, p, n, m = inst.text, inst.pattern, inst.n, inst.m

    if cs.K == 0:
        e = greedy_embedding(w, p)
        return MatchResult(e is not None, e, "tuple-enum",
                           {"tuples": 0, "elapsed": time.perf_counter() - started})

    latest = _latest_positions(w, p)
    stats = {"tuples": 0}
    if latest is None:
        stats["elapsed"] = time.perf_counter() - started
        return MatchResult(False, None, "tuple-enum", stats)

    tables = GapTables(w)
    pins = sorted({q for c in cs for q in c.pair})
    closing = {q: [] for q in pins}
    for c in cs:
        closing[c.j].append((pins.index(c.i), tables.checker(c.language)))
    occ = {}
    for x, s in enumerate(w, start=1):
        occ.setdefault(s, []).append(x)

    chosen = [0] * len(pins)

    def segment(idx, lo, hi):
        first = pins[idx - 1] + 1 if idx else 1
        return _fill(w, p, lo, hi, first, pins[idx] - 1)

    def search(idx, lo):
        if idx == len(pins):
            return True
        q = pins[idx]
        start = pins[idx - 1] + 1 if idx else 1
        # the leftmost fill of the segment before q fixes the earliest slot for q
        head = _fill(w, p, lo, n + 1, start, q - 1)
        if head is None:
            return False
        earliest = head[-1] if head else lo
        cands = occ.get(p[q - 1], [])
        for y in cands[bisect_right(cands, earliest):]:
            if y > latest[q - 1]:
                break
            stats["tuples"] += 1
            if all(chk(chosen[a], y) for a, chk in closing[q]):
                chosen[idx] = y
                if search(idx + 1, y):
                    return True
        return False

    found = search(0, 0)
    witness = None
    if found:
        e, prev = [], 0
        for idx, q in enumerate(pins):
            e.extend(segment(idx, prev, chosen[idx]))
            e.append(chosen[idx])
            prev = chosen[idx]
        e.extend(_fill(w, p, prev, n + 1, pins[-1] + 1, m))
        witness = tuple(e)
    stats["elapsed"] = time.perf_counter() - started
    return MatchResult(found, witness, "tuple-enum", stats)
