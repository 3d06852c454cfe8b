"""Product-automaton matcher for regular constraints.

A configuration is a pattern counter ``i`` (the prefix ``p[1..i]`` is
placed) plus the state of every DFA whose constraint ``(a, b)`` has
``a <= i < b``, i.e. whose gap is currently being read.  The set of
configurations is advanced one text symbol at a time.
"""

from __future__ import annotations

import time

from ..automata import UNDEFINED, Dfa
from ..core import Instance, MatchResult
from ..errors import BudgetExhausted, UnsupportedConstraint
from ..semilinear import build_table

DEFAULT_STATE_BUDGET = 10**6


def counting_dfa(language, n: int, sigma: int) -> Dfa:
    """DFA over ``sigma`` symbols accepting words whose length lies in ``language``.

    States ``0..n`` count letters read; state ``n + 1`` absorbs longer words.
    """
    bits = build_table(language, n).bits
    over = n + 1
    table = [tuple([min(q + 1, over)] * sigma) for q in range(n + 1)]
    table.append(tuple([over] * sigma))
    accepting = frozenset(int(q) for q in bits.nonzero()[0])
    return Dfa(n + 2, 0, accepting, tuple(table))


def _dfas(inst: Instance, compile_semilinear: bool):
    out = []
    for c in inst.constraints:
        if c.is_regular:
            out.append(c.language)
        elif compile_semilinear:
            out.append(counting_dfa(c.language, inst.n, inst.alphabet.sigma))
        else:
            raise UnsupportedConstraint(f"constraint {c.pair} is semilinear")
    return out


def match_nfa_product(inst: Instance, budget: int = DEFAULT_STATE_BUDGET,
                      compile_semilinear: bool = True) -> MatchResult:
    started = time.perf_counter()
    m, cs = inst.m, list(inst.constraints)
    dfas = _dfas(inst, compile_semilinear)
    tables = [d.table for d in dfas]

    # active[i]: constraint indices with a <= i < b, in a fixed order
    active = [[k for k, c in enumerate(cs) if c.i <= i < c.j] for i in range(m + 1)]
    # advancing from i to i+1: where each survivor sits in the new vector
    plans = []
    for i in range(m):
        closing = [slot for slot, k in enumerate(active[i]) if cs[k].j == i + 1]
        carry = {k: slot for slot, k in enumerate(active[i])}
        layout = []
        for k in active[i + 1]:
            layout.append(("carry", carry[k], k) if k in carry else ("start", dfas[k].start, k))
        plans.append((closing, layout))
    accepting = [d.accepting for d in dfas]

    configs = {(0, ())}
    peak, steps = 1, 0
    found = False
    for x in inst.text:
        nxt = set()
        for i, states in configs:
            steps += 1
            if i == m:
                found = True
                break
            # stay: every active gap reads x
            moved = []
            for slot, q in enumerate(states):
                r = tables[active[i][slot]][q][x]
                if r == UNDEFINED:
                    break
                moved.append(r)
            else:
                nxt.add((i, tuple(moved)))
            # advance: p[i+1] is placed on x, which no gap ending at i+1 reads
            if inst.pattern[i] != x:
                continue
            closing, layout = plans[i]
            if any(states[slot] not in accepting[active[i][slot]] for slot in closing):
                continue
            new = []
            for kind, val, k in layout:
                if kind == "start":
                    new.append(val)
                    continue
                r = tables[k][states[val]][x]
                if r == UNDEFINED:
                    break
                new.append(r)
            else:
                nxt.add((i + 1, tuple(new)))
        if found:
            break
        configs = nxt
        peak = max(peak, len(configs))
        if peak > budget:
            raise BudgetExhausted(f"product automaton exceeded {budget} configurations")
        if not configs:
            break
    if not found:
        found = any(i == m for i, _ in configs)
    stats = {"configurations": peak, "steps": steps, "elapsed": time.perf_counter() - started}
    return MatchResult(found, None, "nfa-product", stats)
