"""Seeded random instances for property and agreement tests."""

from __future__ import annotations

import random

from gapmatch.automata import Dfa
from gapmatch.core import Alphabet, GapConstraint, Instance
from gapmatch.semilinear import LinearSet, SemilinearSet


def random_semilinear(rng: random.Random, hi=12, max_parts=3, max_periods=2) -> SemilinearSet:
    parts = []
    for _ in range(rng.randint(1, max_parts)):
        periods = rng.sample(range(1, hi + 1), rng.randint(0, max_periods))
        parts.append(LinearSet(rng.randint(0, hi), tuple(periods)))
    return SemilinearSet(tuple(parts))


def random_dfa(rng: random.Random, sigma: int, max_states=4, density=0.8) -> Dfa:
    k = rng.randint(1, max_states)
    table = [tuple(rng.randrange(k) if rng.random() < density else -1 for _ in range(sigma))
             for _ in range(k)]
    accepting = frozenset(q for q in range(k) if rng.random() < 0.5) or frozenset({rng.randrange(k)})
    return Dfa(k, rng.randrange(k), accepting, tuple(table))


def random_pairs(rng: random.Random, m: int, count: int, nested: bool):
    """Distinct pairs; with ``nested`` only pairwise non-intersecting ones are kept."""
    from gapmatch.structure import Relation, relation

    out = []
    tries = 0
    while len(out) < count and tries < 50 * (count + 1):
        tries += 1
        i = rng.randint(1, m - 1)
        j = rng.randint(i + 1, m)
        c = GapConstraint(i, j, SemilinearSet.at_least(0))
        if any(o.pair == c.pair for o in out):
            continue
        if nested and any(relation(o, c) is Relation.INTERSECTS for o in out):
            continue
        out.append(c)
    return [c.pair for c in out]


def random_instance(rng: random.Random, n_max=12, m_max=5, k_max=4, sigma_max=3,
                    kind="mixed", nested=None, dfa_states=4) -> Instance:
    sigma = rng.randint(1, sigma_max)
    letters = "abcdefgh"[:sigma]
    m = rng.randint(1, m_max)
    n = rng.randint(max(1, m), max(m, n_max))
    text = "".join(rng.choice(letters) for _ in range(n))
    if rng.random() < 0.7 and m <= n:
        # plant the pattern so positives are common
        picks = sorted(rng.sample(range(n), m))
        pattern = "".join(text[x] for x in picks)
    else:
        pattern = "".join(rng.choice(letters) for _ in range(m))
    alpha = Alphabet(tuple(letters))
    if nested is None:
        nested = rng.random() < 0.5
    pairs = random_pairs(rng, m, rng.randint(0, k_max), nested) if m >= 2 else []
    cs = []
    for i, j in pairs:
        regular = kind == "regular" or (kind == "mixed" and rng.random() < 0.5)
        if regular:
            lang = random_dfa(rng, sigma, dfa_states)
        else:
            lang = random_semilinear(rng, hi=max(2, n))
        cs.append(GapConstraint(i, j, lang))
    return Instance.from_strings(text, pattern, cs, alpha)
