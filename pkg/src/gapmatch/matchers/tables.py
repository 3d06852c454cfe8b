"""Per-instance gap-membership tables shared by all matchers.

Semilinear languages get one membership table over ``[0, n]``; each distinct
DFA gets one factor table over the text.  Both are built lazily and cached.
"""

from __future__ import annotations

import numpy as np

from ..automata import Dfa, build_factor_table
from ..semilinear import build_table


class GapTables:
    def __init__(self, text):
        self.text = tuple(text)
        self.n = len(self.text)
        self._lengths = {}
        self._factors = {}

    def lengths(self, language) -> np.ndarray:
        t = self._lengths.get(language)
        if t is None:
            t = self._lengths[language] = build_table(language, self.n).bits
        return t

    def factors(self, dfa: Dfa):
        t = self._factors.get(dfa)
        if t is None:
            t = self._factors[dfa] = build_factor_table(dfa, self.text)
        return t

    def ok(self, language, x: int, y: int) -> bool:
        """Is the gap between text positions ``x < y`` (1-based) in ``language``?"""
        if y <= x:
            return False
        if isinstance(language, Dfa):
            t = self.factors(language)
            return t.epsilon if y == x + 1 else bool(t.bits[x, y - 2])
        return bool(self.lengths(language)[y - x - 1])

    def checker(self, language):
        """A fast ``(x, y) -> bool`` closure for one language."""
        if isinstance(language, Dfa):
            t = self.factors(language)
            bits, eps = t.bits, t.epsilon

            def check(x, y):
                if y <= x:
                    return False
                return eps if y == x + 1 else bool(bits[x, y - 2])
        else:
            bits = self.lengths(language).tolist()

            def check(x, y):
                return y > x and bits[y - x - 1]
        return check

    def mask(self, language) -> np.ndarray:
        """Dense ``n x n`` array; entry ``[x-1, y-1]`` answers ``ok(language, x, y)``."""
        n = self.n
        out = np.zeros((n, n), dtype=bool)
        if isinstance(language, Dfa):
            t = self.factors(language)
            out[:-1, 1:] = t.bits[1:, :-1]
            idx = np.arange(n - 1)
            out[idx, idx + 1] = t.epsilon
            return out
        bits = self.lengths(language)
        glen = np.arange(n)[None, :] - np.arange(n)[:, None] - 1
        valid = glen >= 0
        out[valid] = bits[glen[valid]]
        return out
