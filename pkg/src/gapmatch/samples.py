"""Small reference instances used by the docs, the CLI and the tests."""

from __future__ import annotations

from .core import Alphabet, GapConstraint, Instance
from .semilinear import SemilinearSet

WORKED_TEXT = "abcbcabcabac"
WORKED_PATTERN = "acaba"


def worked_example() -> Instance:
    """Five-letter pattern over {a, b, c} with two regular and two length constraints."""
    alpha = Alphabet.for_strings(WORKED_TEXT, WORKED_PATTERN)
    anything = alpha.dfa(1, 0, [0], [(0, s, 0) for s in "abc"])
    # count c's up to two
    two_cs = alpha.dfa(3, 0, [2], [(q, s, q) for q in range(3) for s in "ab"]
                       + [(0, "c", 1), (1, "c", 2), (2, "c", 2)])
    cs = [
        GapConstraint(1, 4, anything),
        GapConstraint(1, 5, two_cs),
        GapConstraint(2, 3, SemilinearSet.at_least(5)),
        GapConstraint(4, 5, SemilinearSet.finite(range(5))),
    ]
    return Instance.from_strings(WORKED_TEXT, WORKED_PATTERN, cs, alpha)


def any_length() -> SemilinearSet:
    return SemilinearSet.at_least(0)


def crossing_pairs() -> list[tuple[int, int]]:
    """Three constraints on a five-letter pattern where two arcs cross."""
    return [(1, 3), (1, 4), (3, 5)]


def nested_pairs() -> list[tuple[int, int]]:
    """Nine nested or side-by-side constraints on a nine-letter pattern."""
    return [(1, 7), (7, 9), (1, 5), (5, 7), (1, 2), (2, 3), (4, 5), (5, 6), (8, 9)]


def with_pairs(text, pattern, pairs, language=None) -> Instance:
    language = language or any_length()
    return Instance.from_strings(text, pattern, [GapConstraint(i, j, language) for i, j in pairs])
