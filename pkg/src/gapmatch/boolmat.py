"""Bit-packed square boolean matrices.

Rows are packed into 64-bit words (``np.packbits`` order, little bit order),
so row-level OR and AND touch ``ceil(n / 64)`` words.  Bits beyond column
``n`` are always zero.  Indexing is 0-based; callers translate positions.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgument

WORD = 64


class BoolMatrix:
    __slots__ = ("n", "words")

    def __init__(self, n: int, words: np.ndarray):
        self.n = n
        self.words = words

    @staticmethod
    def _width(n):
        return max(1, -(-n // WORD))

    @classmethod
    def zeros(cls, n) -> "BoolMatrix":
        return cls(n, np.zeros((n, cls._width(n)), dtype=np.uint64))

    @classmethod
    def from_dense(cls, dense) -> "BoolMatrix":
        dense = np.asarray(dense, dtype=bool)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise InvalidArgument(f"expected a square matrix, got shape {dense.shape}")
        n = dense.shape[0]
        width = cls._width(n)
        padded = np.zeros((n, width * WORD), dtype=bool)
        padded[:, :n] = dense
        packed = np.packbits(padded, axis=1, bitorder="little")
        return cls(n, packed.view(np.uint64).reshape(n, width).copy())

    @classmethod
    def identity(cls, n) -> "BoolMatrix":
        return cls.from_dense(np.eye(n, dtype=bool))

    @classmethod
    def ones(cls, n) -> "BoolMatrix":
        return cls.from_dense(np.ones((n, n), dtype=bool))

    def to_dense(self) -> np.ndarray:
        raw = np.ascontiguousarray(self.words).view(np.uint8)
        bits = np.unpackbits(raw, axis=1, bitorder="little")
        return bits[:, : self.n].astype(bool)

    def __getitem__(self, ij) -> bool:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"entry ({i}, {j}) outside {self.n}x{self.n} matrix")
        return bool((int(self.words[i, j // WORD]) >> (j % WORD)) & 1)

    def __eq__(self, other):
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.words, other.words)

    __hash__ = None

    def __repr__(self):
        return f"BoolMatrix(n={self.n}, ones={self.count()})"

    def count(self) -> int:
        return int(np.unpackbits(np.ascontiguousarray(self.words).view(np.uint8)).sum())

    def padding_clear(self) -> bool:
        """True if no bit beyond column ``n`` is set."""
        return not self.to_dense_padded()[:, self.n:].any()

    def to_dense_padded(self) -> np.ndarray:
        raw = np.ascontiguousarray(self.words).view(np.uint8)
        return np.unpackbits(raw, axis=1, bitorder="little").astype(bool)


def _check(a: BoolMatrix, b: BoolMatrix):
    if a.n != b.n:
        raise InvalidArgument(f"dimension mismatch: {a.n} vs {b.n}")


def multiply(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean product ``C[i][j] = OR_k A[i][k] AND B[k][j]``.

    Rows of ``b`` are ORed word-parallel into the result.  For every group of
    eight consecutive rows of ``b`` the ORs of all 256 subsets are tabulated,
    so each byte of a row of ``a`` costs a single table lookup.
    """
    _check(a, b)
    n, width = a.n, b.words.shape[1]
    out = np.zeros_like(b.words)
    if n == 0:
        return BoolMatrix(n, out)
    a_bytes = np.ascontiguousarray(a.words).view(np.uint8)
    table = np.zeros((256, width), dtype=np.uint64)
    for g in range(-(-n // 8)):
        col = a_bytes[:, g]
        if not col.any():
            continue
        rows = b.words[8 * g: 8 * g + 8]
        for bit in range(len(rows)):
            lo = 1 << bit
            np.bitwise_or(table[:lo], rows[bit], out=table[lo: 2 * lo])
        span = 1 << len(rows)
        live = np.flatnonzero(col)
        out[live] |= table[:span][col[live]]
    return BoolMatrix(n, out)


def multiply_naive(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Row-by-row reference: OR together the rows of ``b`` selected by each row of ``a``."""
    _check(a, b)
    out = np.zeros_like(b.words)
    dense = a.to_dense()
    for i in range(a.n):
        for k in np.flatnonzero(dense[i]):
            out[i] |= b.words[k]
    return BoolMatrix(a.n, out)


def and_elementwise(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    _check(a, b)
    return BoolMatrix(a.n, a.words & b.words)


def or_elementwise(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    _check(a, b)
    return BoolMatrix(a.n, a.words | b.words)


def any_true(a: BoolMatrix) -> bool:
    return bool(np.bitwise_or.reduce(a.words, axis=None)) if a.words.size else False
