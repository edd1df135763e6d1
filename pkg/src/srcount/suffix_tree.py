"""Suffix tree over an integer-coded text terminated by the sentinel.

Built from the suffix array and LCP array: internal nodes are the LCP
intervals, leaves are single suffixes. Nodes are numbered in preorder, so the
root is node 0 and siblings appear in lexicographic order. Suffix intervals
are reported 1-based and inclusive; rank 1 is always the sentinel suffix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels as K
from .alphabet import SENTINEL, Alphabet
from .errors import InvalidInputError


def suffix_array(t: np.ndarray) -> np.ndarray:
    """Suffix array by prefix doubling; ``t`` must end with a unique minimum."""
    t = np.asarray(t)
    n = t.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    rank = np.unique(t, return_inverse=True)[1].astype(np.int64).reshape(-1)
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        if rank.max() == n - 1:
            return sa.astype(np.int64)
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1 = rank[sa]
        r2 = second[sa]
        step = np.empty(n, dtype=np.int64)
        step[0] = 0
        step[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.cumsum(step)
        k <<= 1


@dataclass(frozen=True)
class SuffixNode:
    node_id: int
    edge_span: tuple[int, int]
    string_depth: int
    suffix_interval: tuple[int, int]
    children: dict = field(default_factory=dict)


@dataclass
class LocusResult:
    matched: bool
    path: list[tuple[int, int]]
    locus_node: int | None


class SuffixTree:
    """Compacted trie of all suffixes of ``codes`` (sentinel included).

    ``codes`` uses :mod:`srcount.alphabet` coding: symbols ``>= 1``, the final
    entry is the sentinel ``0``.
    """

    root = 0

    def __init__(self, codes, alphabet: Alphabet | None = None):
        t = np.asarray(codes, dtype=np.int32).reshape(-1)
        if t.size == 0 or t[-1] != SENTINEL:
            raise InvalidInputError("text must end with the sentinel")
        if np.count_nonzero(t == SENTINEL) != 1:
            raise InvalidInputError("sentinel occurs inside the text")
        if t.min() < 0:
            raise InvalidInputError("negative symbol code")
        self.t = t
        self.alphabet = alphabet
        self.size = int(t.size)          # suffixes, sentinel suffix included
        self.n = self.size - 1           # length of the text proper
        self.radix = int(t.max()) + 1
        self._tl = tuple(int(x) for x in t)

        sa = suffix_array(t)
        lcp = K.kasai_lcp(t, sa)
        ilo, ihi, idep = K.lcp_intervals(lcp)
        lo = np.concatenate((ilo, np.arange(self.size)))
        hi = np.concatenate((ihi, np.arange(self.size)))
        depth = np.concatenate((idep, self.size - sa))
        leaf = np.concatenate((np.zeros(ilo.size, bool), np.ones(self.size, bool)))
        order = np.lexsort((leaf, -hi, lo))
        self.sa = sa
        self.lo = lo[order]
        self.hi = hi[order]
        self.depth = depth[order]
        self.is_leaf = leaf[order]
        self.parent = K.preorder_parents(self.lo, self.hi)
        self.num_nodes = int(self.lo.size)

        pdepth = np.where(self.parent >= 0, self.depth[np.maximum(self.parent, 0)], 0)
        self.edge_start = np.where(self.parent >= 0, sa[self.lo] + pdepth, 0)
        self.edge_len = self.depth - pdepth
        first = t[np.minimum(self.edge_start, self.size - 1)]

        kids = np.flatnonzero(self.parent >= 0)
        kids = kids[np.argsort(self.parent[kids], kind="stable")]
        self.child_id = kids.astype(np.int64)
        self.child_char = first[kids].astype(np.int64)
        counts = np.bincount(self.parent[kids], minlength=self.num_nodes)
        self.child_ptr = np.zeros(self.num_nodes + 1, dtype=np.int64)
        np.cumsum(counts, out=self.child_ptr[1:])
        self._child = {
            int(p) * self.radix + int(c): int(w)
            for p, c, w in zip(self.parent[kids], self.child_char, kids)
        }

    @classmethod
    def from_text(cls, text) -> "SuffixTree":
        alpha = Alphabet.of(text)
        return cls(alpha.encode(text, sentinel=True), alpha)

    def child(self, v: int, c: int) -> int | None:
        if c < 0 or c >= self.radix:
            return None
        return self._child.get(v * self.radix + c)

    def children(self, v: int) -> dict[int, int]:
        a, b = self.child_ptr[v], self.child_ptr[v + 1]
        return {int(c): int(w) for c, w in zip(self.child_char[a:b], self.child_id[a:b])}

    def string_depth(self, v: int) -> int:
        return int(self.depth[v])

    def edge_span(self, v: int) -> tuple[int, int]:
        """``(start, length)`` of ``v``'s incoming edge label, 0-based into the text."""
        return int(self.edge_start[v]), int(self.edge_len[v])

    def suffix_interval(self, v: int) -> tuple[int, int]:
        return int(self.lo[v]) + 1, int(self.hi[v]) + 1

    def node(self, v: int) -> SuffixNode:
        return SuffixNode(v, self.edge_span(v), self.string_depth(v),
                          self.suffix_interval(v), self.children(v))

    def path_string(self, v: int) -> tuple[int, ...]:
        start = int(self.sa[self.lo[v]])
        return self._tl[start:start + int(self.depth[v])]

    def label(self, v: int) -> str:
        codes = self.path_string(v)
        return self.alphabet.decode(codes) if self.alphabet else str(codes)

    def locus(self, pattern) -> LocusResult:
        """Walk ``pattern`` (a sequence of codes) down from the root."""
        p = tuple(pattern)
        m = len(p)
        tl = self._tl
        v, d = self.root, 0
        path: list[tuple[int, int]] = []
        while d < m:
            w = self.child(v, p[d])
            if w is None:
                return LocusResult(False, path, None)
            es = int(self.edge_start[w])
            end = min(m, int(self.depth[w]))
            if tl[es + 1: es + end - d] != p[d + 1:end]:
                return LocusResult(False, path, None)
            path.append((w, end - d))
            v, d = w, end
        return LocusResult(True, path, v)


def build_suffix_tree(codes, alphabet: Alphabet | None = None) -> SuffixTree:
    return SuffixTree(codes, alphabet)
