"""Counting problems that reduce to substring range counting by relabeling.

* position-restricted counting: label = position
* indexing with intervals: label = position inside the interval set, else 0
* indexing with gaps: label of ``S[i + d + 1]`` = rank of the reversed prefix ``S[1..i]``
* aligned matching: label of ``S1[i]`` = rank of the suffix ``S2[f(i)..]``

All real labels lie in ``[1, n]``; label 0 marks positions no query can reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError
from .index import IndexConfig, LabeledText, SrcIndex
from .suffix_tree import SuffixTree


@dataclass(frozen=True)
class IntervalSet:
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        spans = tuple((int(s), int(e)) for s, e in self.intervals)
        object.__setattr__(self, "intervals", spans)
        for s, e in spans:
            if not 1 <= s <= e:
                raise InvalidInputError(f"bad interval ({s}, {e})")

    def check(self, n: int) -> None:
        for s, e in self.intervals:
            if e > n:
                raise InvalidInputError(f"interval ({s}, {e}) exceeds text length {n}")


@dataclass(frozen=True)
class GapSpec:
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise InvalidInputError("gap length must be non-negative")


def _pattern_codes(tree: SuffixTree, text, pattern):
    if len(pattern) == 0:
        raise InvalidInputError("pattern must be non-empty")
    if isinstance(text, (bytes, bytearray)) and isinstance(pattern, str):
        pattern = pattern.encode()
    return tree.alphabet.encode_pattern(pattern)


def _reverse(seq):
    return seq[::-1]


def _suffix_ranks(tree: SuffixTree) -> np.ndarray:
    # rank of the suffix starting at each 0-based position; sentinel suffix has rank 0
    isa = np.empty(tree.size, dtype=np.int64)
    isa[tree.sa] = np.arange(tree.size)
    return isa


def _rank_window(tree: SuffixTree, text, pattern) -> tuple[int, int] | None:
    codes = _pattern_codes(tree, text, pattern)
    if codes is None:
        return None
    r = tree.locus(codes)
    if not r.matched:
        return None
    lo, hi = tree.suffix_interval(r.locus_node)
    return lo - 1, hi - 1


# position-restricted substring counting

def prsc_build(text, config: IndexConfig | None = None) -> SrcIndex:
    n = len(text)
    return SrcIndex(LabeledText(text, range(1, n + 1), n), config)


def prsc_count(idx: SrcIndex, pattern, i: int, j: int) -> int:
    """Occurrences of ``pattern`` starting in ``text[i..j]`` (1-based, inclusive)."""
    if not 1 <= i <= j <= idx.n:
        raise InvalidInputError(f"bad position interval [{i}, {j}] for length {idx.n}")
    return idx.count(pattern, i, j)


# indexing substrings with intervals

def intervals_build(text, pi: IntervalSet, config: IndexConfig | None = None) -> SrcIndex:
    n = len(text)
    pi.check(n)
    cover = np.zeros(n + 2, dtype=np.int64)
    for s, e in pi.intervals:
        cover[s] += 1
        cover[e + 1] -= 1
    inside = np.cumsum(cover)[1:n + 1] > 0
    labels = np.where(inside, np.arange(1, n + 1), 0)
    return SrcIndex(LabeledText(text, labels, n), config)


def intervals_count(idx: SrcIndex, pattern, i: int, j: int) -> int:
    """Occurrences starting in ``[i, j]`` and inside some interval of the set."""
    if i < 1 or j > idx.n:
        raise InvalidInputError(f"bad position interval [{i}, {j}] for length {idx.n}")
    if i > j:
        return 0
    return idx.count(pattern, i, j)


# indexing substrings with gaps

class GappedIndex:
    """Counts ``P1``, then exactly ``d`` characters, then ``P2``."""

    def __init__(self, text, gap: GapSpec, config: IndexConfig | None = None):
        n = len(text)
        if n == 0:
            raise InvalidInputError("text must be non-empty")
        self.text = text
        self.d = gap.d
        # reversed prefix S[1..i] is the suffix of reverse(S) starting at n - i (0-based)
        self.rev_tree = SuffixTree.from_text(_reverse(text))
        rank = _suffix_ranks(self.rev_tree)
        labels = np.zeros(n, dtype=np.int64)
        i = np.arange(1, n - self.d)
        labels[i + self.d] = rank[n - i]
        self.idx = SrcIndex(LabeledText(text, labels, n), config)

    def count(self, p1, p2) -> int:
        if len(p2) == 0:
            raise InvalidInputError("pattern must be non-empty")
        if isinstance(self.text, (bytes, bytearray)) and isinstance(p1, str):
            p1 = p1.encode()
        win = _rank_window(self.rev_tree, self.text, _reverse(p1))
        if win is None:
            return 0
        return self.idx.count(p2, win[0], win[1])


def gaps_build(text, gap: GapSpec, config: IndexConfig | None = None) -> GappedIndex:
    return GappedIndex(text, gap, config)


def gaps_count(idx: GappedIndex, p1, p2) -> int:
    return idx.count(p1, p2)


# aligned pattern matching

class AlignedIndex:
    """Counts positions ``i`` with ``P1`` at ``i`` in ``S1`` and ``P2`` at ``f(i)`` in ``S2``.

    ``position_map`` gives ``f`` as 1-based targets per position of ``S1``
    (``None`` or 0 for unmapped); the default is the identity.
    """

    def __init__(self, text1, text2, position_map: Sequence[int | None] | None = None,
                 config: IndexConfig | None = None):
        n1, n2 = len(text1), len(text2)
        if n1 == 0 or n2 == 0:
            raise InvalidInputError("both texts must be non-empty")
        self.text2 = text2
        self.tree2 = SuffixTree.from_text(text2)
        rank = _suffix_ranks(self.tree2)
        if position_map is None:
            target = np.arange(1, n1 + 1)
        else:
            if len(position_map) != n1:
                raise InvalidInputError("position map must cover every position of the first text")
            target = np.array([0 if f is None else int(f) for f in position_map], dtype=np.int64)
            if target.size and (target.min() < 0 or target.max() > n2):
                raise InvalidInputError("position map points outside the second text")
        ok = (target >= 1) & (target <= n2)
        labels = np.zeros(n1, dtype=np.int64)
        labels[ok] = rank[target[ok] - 1]
        self.idx = SrcIndex(LabeledText(text1, labels, n2), config)

    def count(self, p1, p2) -> int:
        if len(p1) == 0:
            raise InvalidInputError("pattern must be non-empty")
        win = _rank_window(self.tree2, self.text2, p2)
        if win is None:
            return 0
        return self.idx.count(p1, win[0], win[1])


def aligned_build(text1, text2, position_map=None, config: IndexConfig | None = None) -> AlignedIndex:
    return AlignedIndex(text1, text2, position_map, config)


def aligned_count(idx: AlignedIndex, p1, p2) -> int:
    return idx.count(p1, p2)
