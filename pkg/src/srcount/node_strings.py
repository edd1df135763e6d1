"""Per-node strings for the shallow part of the suffix tree.

The string stored at a node ``v`` lists, for every occurrence of the node's
path string, the character that follows it; entries are ordered by the label
of the occurrence's first character. The root holds the text sorted by
label. A child's string is obtained from its parent's by keeping the entries
equal to the edge's first character and replacing each by the character one
edge-length further on.

All strings at the same tree depth are concatenated into a single
:class:`RankSelectString`; a node keeps its offset and length in that level.
For a stored child ``w`` of ``v`` we also keep ``node_base[w]``: the number of
occurrences of the edge character in ``v``'s level before ``v``'s block. That
turns an interval of ``v`` into an interval of ``w`` with exactly two rank
queries.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from . import kernels as K
from .rank_select import RankSelectString
from .suffix_tree import SuffixTree


def default_tau(n: int) -> int:
    """String-depth cutoff ``ceil(lg n / lg lg n)``, pinned to 1 for tiny texts."""
    if n <= 4:
        return 1
    lg = math.log2(n)
    return max(1, math.ceil(lg / max(1.0, math.log2(lg))))


def build_root_string(text: Sequence[int] | np.ndarray,
                      labels: Sequence[int] | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Characters sorted stably by label, and their 1-based text positions."""
    t = np.asarray(text)
    order = np.argsort(np.asarray(labels, dtype=np.int64), kind="stable")
    return t[order], order + 1


def derive_child_string(parent_seq: Sequence[int], parent_positions: Sequence[int],
                        c: int, skip: int, text: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Keep entries equal to ``c`` and move each ``skip`` characters forward.

    ``parent_positions`` are 1-based text positions of the entries, ``text`` is
    the coded text including its final sentinel, so position ``n + 1`` reads
    as the sentinel.
    """
    seq = np.asarray(parent_seq)
    pos = np.asarray(parent_positions, dtype=np.int64)
    t = np.asarray(text)
    moved = pos[seq == c] + skip
    return t[moved - 1], moved


class NodeString:
    """Read-only window ``[off, off + length)`` of a level string, 1-based API."""

    __slots__ = ("rs", "off", "length")

    def __init__(self, rs: RankSelectString, off: int, length: int):
        self.rs = rs
        self.off = off
        self.length = length

    def __len__(self) -> int:
        return self.length

    def rank(self, c: int, i: int) -> int:
        if not 0 <= i <= self.length:
            raise ValueError(f"rank position {i} outside [0, {self.length}]")
        return int(self.rs._rank(c, self.off + i) - self.rs._rank(c, self.off))

    def select(self, c: int, j: int) -> int:
        base = self.rs._rank(c, self.off)
        if j < 1 or j > self.rs._rank(c, self.off + self.length) - base:
            raise LookupError(f"character {c} has no occurrence number {j}")
        return int(self.rs._select(c, base + j)) - self.off + 1

    def access(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise ValueError(f"access position {i} outside [1, {self.length}]")
        return int(self.rs._access(self.off + i - 1))

    def to_list(self) -> list[int]:
        return [int(self.rs._access(self.off + i)) for i in range(self.length)]


class TopTreeStrings:
    """Strings for the root and every internal node of string depth ``< tau``."""

    def __init__(self, st: SuffixTree, labels: Sequence[int] | np.ndarray, tau: int):
        if tau < 1:
            raise ValueError("tau must be at least 1")
        labels = np.asarray(labels, dtype=np.int64)
        if labels.size != st.n:
            raise ValueError("one label per text position required")
        self.tau = int(tau)
        nn = st.num_nodes
        self.node_level = np.full(nn, -1, dtype=np.int64)
        self.node_off = np.full(nn, -1, dtype=np.int64)
        self.node_len = np.zeros(nn, dtype=np.int64)
        self.node_base = np.zeros(nn, dtype=np.int64)
        self.stored = (~st.is_leaf) & (st.depth < self.tau)
        self.stored[st.root] = True

        order = np.argsort(labels, kind="stable")
        self.root_positions = order.astype(np.int64)      # 0-based text positions
        chars = st.t[order].astype(np.int64)
        pos = order.astype(np.int64)
        owner = np.zeros(st.n, dtype=np.int64)
        self.node_level[st.root] = 0
        self.node_off[st.root] = 0
        self.node_len[st.root] = st.n

        self.levels: list[RankSelectString] = []
        while chars.size:
            self.levels.append(RankSelectString(chars, st.radix))
            chars, pos, owner = K.derive_level(
                chars, pos, owner, st.child_ptr, st.child_char, st.child_id,
                self.stored, st.depth, st.t, st.radix - 1,
                self.node_off, self.node_len, self.node_base,
            )
            if owner.size:
                self.node_level[np.unique(owner)] = len(self.levels)
        self.stored &= self.node_level >= 0

    def string(self, v: int) -> NodeString | None:
        lev = int(self.node_level[v])
        if lev < 0:
            return None
        return NodeString(self.levels[lev], int(self.node_off[v]), int(self.node_len[v]))

    def level_sizes(self) -> list[int]:
        """Total stored characters per tree depth."""
        return [len(rs) for rs in self.levels]

    def total_chars(self) -> int:
        return sum(self.level_sizes())


def build_top_tree_strings(st: SuffixTree, labels, tau: int) -> TopTreeStrings:
    return TopTreeStrings(st, labels, tau)

