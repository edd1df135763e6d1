"""Rank, select and access over small-alphabet sequences.

A :class:`RankSelectString` is a balanced wavelet tree in wavelet-matrix
layout: ``ceil(lg sigma)`` bitvectors, each with a two-level rank directory
(512-bit superblocks, 64-bit blocks). Queries cost ``O(log sigma)`` bitvector
operations. The public API uses 1-based positions, as in the usual
``rank(c, i)`` / ``select(c, j)`` definitions.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels as K
from .errors import InvalidInputError, NotFoundError

_BYTE_POP = np.array([bin(x).count("1") for x in range(256)], dtype=np.int64)


def build_directory(bits: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pack rows of 0/1 values into words and build their rank directories.

    ``bits`` has shape ``(levels, n)``. Returns ``(words, supers, blocks)`` in
    the layout expected by :mod:`srcount.kernels`.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim == 1:
        bits = bits[None, :]
    nrows, n = bits.shape
    nwords = n // 64 + 1
    packed = np.packbits(bits, axis=1, bitorder="little")
    raw = np.zeros((nrows, nwords * 8), dtype=np.uint8)
    raw[:, : packed.shape[1]] = packed
    words = np.ascontiguousarray(raw).view("<u8").astype(np.uint64)
    per_word = _BYTE_POP[raw].reshape(nrows, nwords, 8).sum(axis=2)
    before = np.zeros((nrows, nwords + 1), dtype=np.int64)
    np.cumsum(per_word, axis=1, out=before[:, 1:])
    nsuper = (nwords + 7) // 8
    supers = np.empty((nrows, nsuper + 1), dtype=np.int64)
    supers[:, :nsuper] = before[:, 0:nwords:8]
    supers[:, nsuper] = before[:, nwords]
    word_super = np.arange(nwords) >> 3
    blocks = (before[:, :nwords] - supers[:, word_super]).astype(np.uint16)
    return words, supers, blocks


class BitVector:
    """Plain bitvector with constant-time rank and binary-search select."""

    def __init__(self, bits: Iterable[int]):
        arr = np.fromiter((1 if b else 0 for b in bits), dtype=np.uint8)
        self.n = int(arr.shape[0])
        self.words, self.supers, self.blocks = build_directory(arr)
        self.nsuper = self.supers.shape[1] - 1
        self.ones = int(self.supers[0, -1])

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int(K.bit_at(self.words, 0, i))

    def rank1(self, i: int) -> int:
        """Set bits among the first ``i`` bits."""
        if not 0 <= i <= self.n:
            raise InvalidInputError(f"rank position {i} outside [0, {self.n}]")
        return int(K.rank1(self.words, self.supers, self.blocks, 0, i))

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def select1(self, j: int) -> int:
        """0-based position of the ``j``-th set bit."""
        if not 1 <= j <= self.ones:
            raise NotFoundError(f"no set bit number {j}")
        return int(K.select1(self.words, self.supers, self.blocks, 0, self.nsuper, j))

    def select0(self, j: int) -> int:
        if not 1 <= j <= self.n - self.ones:
            raise NotFoundError(f"no clear bit number {j}")
        return int(K.select0(self.words, self.supers, self.blocks, 0, self.nsuper, j))


class RankSelectString:
    """Immutable integer sequence supporting rank, select and access.

    Characters are integer codes in ``[0, alphabet_size)``.
    """

    def __init__(self, seq: Sequence[int] | np.ndarray, alphabet_size: int | None = None):
        values = np.asarray(seq, dtype=np.int64).reshape(-1)
        if alphabet_size is None:
            alphabet_size = int(values.max()) + 1 if values.size else 1
        if alphabet_size < 1:
            raise InvalidInputError("alphabet_size must be positive")
        if values.size and (values.min() < 0 or values.max() >= alphabet_size):
            raise InvalidInputError(
                f"codes must lie in [0, {alphabet_size}); got "
                f"[{values.min()}, {values.max()}]"
            )
        self.length = int(values.size)
        self.alphabet_size = int(alphabet_size)
        self.nlev = max(1, (self.alphabet_size - 1).bit_length())
        rows = np.empty((self.nlev, self.length), dtype=np.uint8)
        zeros = np.empty(self.nlev, dtype=np.int64)
        cur = values
        for lev in range(self.nlev):
            b = ((cur >> (self.nlev - 1 - lev)) & 1).astype(np.uint8)
            rows[lev] = b
            left = cur[b == 0]
            zeros[lev] = left.size
            cur = np.concatenate((left, cur[b == 1]))
        self.zeros = zeros
        self.words, self.supers, self.blocks = build_directory(rows)
        self.nsuper = self.supers.shape[1] - 1

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"RankSelectString(length={self.length}, alphabet_size={self.alphabet_size})"

    # 0-based, unchecked; used on hot paths
    def _rank(self, c: int, i: int) -> int:
        if c < 0 or c >= self.alphabet_size:
            return 0
        return K.wm_rank(self.words, self.supers, self.blocks, self.zeros, self.nlev, c, i)

    def _select(self, c: int, j: int) -> int:
        return K.wm_select(self.words, self.supers, self.blocks, self.zeros,
                           self.nlev, self.nsuper, c, j)

    def _access(self, i: int) -> int:
        return K.wm_access(self.words, self.supers, self.blocks, self.zeros, self.nlev, i)

    def rank(self, c: int, i: int) -> int:
        """Occurrences of ``c`` among positions ``1..i``."""
        if not 0 <= i <= self.length:
            raise InvalidInputError(f"rank position {i} outside [0, {self.length}]")
        return int(self._rank(c, i))

    def select(self, c: int, j: int) -> int:
        """1-based position of the ``j``-th occurrence of ``c``."""
        if j < 1 or j > self.rank(c, self.length):
            raise NotFoundError(f"character {c} has no occurrence number {j}")
        return int(self._select(c, j)) + 1

    def access(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise InvalidInputError(f"access position {i} outside [1, {self.length}]")
        return int(self._access(i - 1))

    def count_less(self, lo: int, hi: int, v: int) -> int:
        """Entries among 0-based positions ``[lo, hi)`` with value ``< v``."""
        return int(K.wm_count_less(self.words, self.supers, self.blocks, self.zeros,
                                   self.nlev, lo, hi, v))

    def quantile(self, lo: int, hi: int, k: int) -> int:
        """``k``-th smallest (0-based) value among 0-based positions ``[lo, hi)``."""
        if not 0 <= k < hi - lo:
            raise InvalidInputError(f"quantile {k} outside range of size {hi - lo}")
        return int(K.wm_quantile(self.words, self.supers, self.blocks, self.zeros,
                                 self.nlev, lo, hi, k))

    def to_list(self) -> list[int]:
        return [int(self._access(i)) for i in range(self.length)]


def build_rs(seq: Sequence[int] | np.ndarray, alphabet_size: int | None = None) -> RankSelectString:
    return RankSelectString(seq, alphabet_size)
