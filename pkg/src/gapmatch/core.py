"""Instances, gap semantics, embedding validation and the backtracking oracle.

Positions are 1-based throughout the public API: an embedding ``e`` is a
tuple with ``e[t - 1]`` the text position of pattern position ``t``.
"""

from __future__ import annotations

import time
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .automata import Dfa, dfa_accepts
from .errors import BudgetExhausted, InvalidArgument, ValidationError
from .semilinear import SemilinearSet, contains

ConstraintLanguage = Union[SemilinearSet, Dfa]
Embedding = tuple[int, ...]

DEFAULT_ORACLE_STEPS = 10**7


@dataclass(frozen=True)
class Alphabet:
    """Bijection between external tokens and dense symbol ids ``0..sigma-1``."""

    tokens: tuple[str, ...]

    def __post_init__(self):
        tokens = tuple(self.tokens)
        if len(set(tokens)) != len(tokens):
            raise InvalidArgument("alphabet tokens must be distinct")
        object.__setattr__(self, "tokens", tokens)

    @classmethod
    def for_strings(cls, *seqs) -> "Alphabet":
        return cls(tuple(sorted({tok for seq in seqs for tok in seq})))

    @property
    def sigma(self) -> int:
        return len(self.tokens)

    @property
    def _index(self) -> dict:
        return {tok: i for i, tok in enumerate(self.tokens)}

    def symbol(self, token) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise ValidationError("unknown-symbol", f"token {token!r} is not in the alphabet") from None

    def encode(self, seq) -> tuple[int, ...]:
        index = self._index
        try:
            return tuple(index[tok] for tok in seq)
        except KeyError as exc:
            raise ValidationError("unknown-symbol", f"token {exc.args[0]!r} is not in the alphabet") from None

    def decode(self, symbols) -> tuple[str, ...]:
        return tuple(self.tokens[s] for s in symbols)

    def dfa(self, state_count, start, accepting, transitions) -> Dfa:
        """Build a DFA whose transitions are labelled by tokens."""
        triples = [(q, self.symbol(tok), r) for q, tok, r in transitions]
        return Dfa.from_transitions(state_count, start, accepting, triples, self.sigma)


@dataclass(frozen=True)
class GapConstraint:
    i: int
    j: int
    language: ConstraintLanguage

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValidationError("constraint-order", f"need 1 <= i < j, got ({self.i}, {self.j})")
        if not isinstance(self.language, (SemilinearSet, Dfa)):
            raise InvalidArgument(f"unsupported constraint language {type(self.language).__name__}")

    @property
    def is_regular(self) -> bool:
        return isinstance(self.language, Dfa)

    @property
    def size(self) -> int:
        return self.language.size

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)


@dataclass(frozen=True)
class ConstraintSet:
    constraints: tuple[GapConstraint, ...] = ()

    def __post_init__(self):
        constraints = tuple(self.constraints)
        seen = set()
        for c in constraints:
            if c.pair in seen:
                raise ValidationError("duplicate-constraint", f"two constraints on ({c.i}, {c.j})")
            seen.add(c.pair)
        object.__setattr__(self, "constraints", constraints)

    def __iter__(self):
        return iter(self.constraints)

    def __len__(self):
        return len(self.constraints)

    def __getitem__(self, k):
        return self.constraints[k]

    @property
    def K(self) -> int:
        return len(self.constraints)

    @property
    def gapsize(self) -> int:
        return max((c.size for c in self.constraints), default=0)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.constraints)

    @property
    def all_semilinear(self) -> bool:
        return all(not c.is_regular for c in self.constraints)

    @property
    def all_regular(self) -> bool:
        return all(c.is_regular for c in self.constraints)


@dataclass(frozen=True)
class Instance:
    text: tuple[int, ...]
    pattern: tuple[int, ...]
    constraints: ConstraintSet
    alphabet: Alphabet
    metadata: Mapping = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        text, pattern = tuple(self.text), tuple(self.pattern)
        cs = self.constraints
        if not isinstance(cs, ConstraintSet):
            cs = ConstraintSet(tuple(cs))
        object.__setattr__(self, "text", text)
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "constraints", cs)
        if not text:
            raise ValidationError("schema", "text must be non-empty")
        if not pattern:
            raise ValidationError("schema", "pattern must be non-empty")
        sigma = self.alphabet.sigma
        if any(not 0 <= s < sigma for s in text + pattern):
            raise ValidationError("unknown-symbol", "text or pattern symbol outside the alphabet")
        m = len(pattern)
        for c in cs:
            if c.j > m:
                raise ValidationError("position-range", f"constraint ({c.i}, {c.j}) exceeds pattern length {m}")
            if c.is_regular and c.language.sigma != sigma:
                raise ValidationError("unknown-symbol", "DFA alphabet differs from the instance alphabet")

    @classmethod
    def from_strings(cls, text, pattern, constraints=(), alphabet=None, metadata=None) -> "Instance":
        """Build from token sequences (plain strings work: one token per character)."""
        if alphabet is None:
            alphabet = Alphabet.for_strings(text, pattern)
        return cls(alphabet.encode(text), alphabet.encode(pattern), ConstraintSet(tuple(constraints)),
                   alphabet, dict(metadata or {}))

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def m(self) -> int:
        return len(self.pattern)

    def with_constraints(self, constraints) -> "Instance":
        return Instance(self.text, self.pattern, ConstraintSet(tuple(constraints)), self.alphabet,
                        dict(self.metadata))


@dataclass
class MatchResult:
    matched: bool
    witness: Embedding | None = None
    algorithm: str = ""
    stats: dict = field(default_factory=dict)


def gap(text: Sequence[int], e: Embedding, i: int, j: int) -> tuple:
    """The factor of ``text`` strictly between the images of ``i`` and ``j``."""
    if not 1 <= i < j <= len(e):
        raise InvalidArgument(f"need 1 <= i < j <= {len(e)}, got ({i}, {j})")
    return tuple(text[e[i - 1]: e[j - 1] - 1])


def satisfies(text: Sequence[int], language: ConstraintLanguage, x: int, y: int) -> bool:
    """Does the gap between text positions ``x < y`` belong to ``language``?"""
    if isinstance(language, Dfa):
        return dfa_accepts(language, text[x: y - 1])
    return contains(language, y - x - 1)


def check_embedding(inst: Instance, e) -> bool:
    e = tuple(e)
    w, p = inst.text, inst.pattern
    if len(e) != len(p):
        return False
    if any(not isinstance(x, int) or not 1 <= x <= len(w) for x in e):
        return False
    if any(e[t] >= e[t + 1] for t in range(len(e) - 1)):
        return False
    if any(w[x - 1] != s for x, s in zip(e, p)):
        return False
    return all(satisfies(w, c.language, e[c.i - 1], e[c.j - 1]) for c in inst.constraints)


def greedy_embedding(w: Sequence[int], p: Sequence[int]) -> Embedding | None:
    """Leftmost embedding of ``p`` into ``w`` ignoring constraints."""
    e, t = [], 0
    for x, s in enumerate(w, start=1):
        if t < len(p) and s == p[t]:
            e.append(x)
            t += 1
    return tuple(e) if t == len(p) else None


def _latest_positions(w, p):
    # latest[t] bounds e(t+1) so that p[t+1..] still fits to the right
    latest = [0] * len(p)
    x = len(w)
    for t in range(len(p) - 1, -1, -1):
        while x >= 1 and w[x - 1] != p[t]:
            x -= 1
        if x < 1:
            return None
        latest[t] = x
        x -= 1
    return latest


def oracle_match(inst: Instance, budget: int = DEFAULT_ORACLE_STEPS) -> MatchResult:
    """Exhaustive depth-first search; the witness is the lexicographically smallest.

    Each constraint is checked as soon as its right endpoint is placed, and
    partial embeddings already known to be dead ends are skipped.  ``budget``
    caps the number of candidate placements tried.
    """
    started = time.perf_counter()
    w, p = inst.text, inst.pattern
    m = len(p)
    latest = _latest_positions(w, p)
    stats = {"steps": 0}
    if latest is None:
        stats["elapsed"] = time.perf_counter() - started
        return MatchResult(False, None, "oracle", stats)

    occurrences: dict[int, list[int]] = {}
    for x, s in enumerate(w, start=1):
        occurrences.setdefault(s, []).append(x)
    ending = [[] for _ in range(m + 1)]
    for c in inst.constraints:
        ending[c.j].append(c)
    memo: dict = {}

    def ok(c, x, y):
        key = (c.i, c.j, y - x - 1) if not c.is_regular else (c.i, c.j, x, y)
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = satisfies(w, c.language, x, y)
        return hit

    # the future of a partial embedding depends only on the last placed
    # position and the images of left endpoints of still-open constraints
    open_left = [sorted({c.i for c in inst.constraints if c.i <= t + 1 < c.j}) for t in range(m)]
    failed: set = set()
    keys = [None] * m

    e = [0] * m
    cursor = [0] * m  # next candidate index into occurrences[p[t]]
    steps = 0
    found = False
    try:
        t = 0
        cursor[0] = bisect_right(occurrences.get(p[0], ()), 0)
        while t >= 0:
            occ = occurrences.get(p[t], ())
            k = cursor[t]
            if k >= len(occ) or occ[k] > latest[t]:
                t -= 1
                if t >= 0:
                    failed.add(keys[t])
                continue
            cursor[t] = k + 1
            x = occ[k]
            steps += 1
            if steps > budget:
                raise BudgetExhausted(f"oracle exceeded {budget} steps")
            e[t] = x
            if not all(ok(c, e[c.i - 1], x) for c in ending[t + 1]):
                continue
            if t + 1 == m:
                found = True
                break
            key = (t, x, tuple(e[i - 1] for i in open_left[t]))
            if key in failed:
                continue
            keys[t] = key
            t += 1
            cursor[t] = bisect_right(occurrences.get(p[t], ()), x)
    finally:
        stats["steps"] = steps
        stats["memo"] = len(failed)
        stats["elapsed"] = time.perf_counter() - started
    return MatchResult(found, tuple(e) if found else None, "oracle", stats)
