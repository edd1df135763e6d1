"""Substring range counting index.

:class:`SrcIndex` answers: how many occurrences of a pattern ``P`` start at a
position whose label lies in ``[a, b]``? Patterns of length at most ``tau``
walk down the suffix tree, narrowing an interval of each node string with two
rank queries per edge. Longer patterns find their suffix-array interval and
count points of the (suffix rank, label) grid in the matching rectangle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import oracle
from .alphabet import Alphabet
from .errors import InvalidInputError
from .label_index import LabelIndex
from .node_strings import TopTreeStrings, default_tau
from .range2d import RangeCounter2D
from .suffix_tree import SuffixTree


@dataclass(frozen=True)
class LabeledText:
    """A text with one non-negative integer label per position, all ``<= u``."""

    text: str | bytes | Sequence
    labels: tuple[int, ...]
    u: int | None = None

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != len(self.text):
            raise InvalidInputError(
                f"{len(labels)} labels for a text of length {len(self.text)}"
            )
        if any(x < 0 for x in labels):
            raise InvalidInputError("labels must be non-negative")
        top = max(labels, default=0)
        if self.u is None:
            object.__setattr__(self, "u", top)
        elif top > self.u:
            raise InvalidInputError(f"label {top} exceeds universe bound {self.u}")

    @property
    def n(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class SrcQuery:
    pattern: str | bytes | Sequence
    a: int
    b: int

    def __post_init__(self):
        if len(self.pattern) == 0:
            raise InvalidInputError("pattern must be non-empty")

    @property
    def m(self) -> int:
        return len(self.pattern)


@dataclass(frozen=True)
class IndexConfig:
    tau: int | None = None
    self_check: bool = False
    self_check_queries: int = 200
    seed: int = 0


@dataclass
class QueryStats:
    """Per-call instrumentation; pass a fresh instance to each query."""

    path: str = ""
    edges: int = 0
    rank_calls: int = 0
    select_calls: int = 0


@dataclass
class _Trail:
    # (parent node, edge character, occurrences of the character before the interval)
    steps: list = field(default_factory=list)
    count: int = 0


class SrcIndex:
    """Immutable substring range counting index over a :class:`LabeledText`."""

    def __init__(self, lt: LabeledText, config: IndexConfig | None = None):
        if lt.n == 0:
            raise InvalidInputError("text must be non-empty")
        self.lt = lt
        self.config = config or IndexConfig()
        self.n = lt.n
        self.u = lt.u
        self._bytes_text = isinstance(lt.text, (bytes, bytearray))
        self.alphabet = Alphabet.of(lt.text)
        self.st = SuffixTree(self.alphabet.encode(lt.text, sentinel=True), self.alphabet)
        tau = self.config.tau if self.config.tau is not None else default_tau(self.n)
        if tau < 1:
            raise InvalidInputError("tau must be at least 1")
        self.tau = int(tau)
        labels = np.asarray(lt.labels, dtype=np.int64)
        self.tts = TopTreeStrings(self.st, labels, self.tau)
        self.li = LabelIndex(labels, self.u)
        # the sentinel-only suffix (rank 1) is left out: point x is suffix rank x + 1
        self.rc = RangeCounter2D(labels[self.st.sa[1:]])
        if self.config.self_check:
            self._self_check()

    def __repr__(self) -> str:
        return f"SrcIndex(n={self.n}, sigma={self.alphabet.sigma}, u={self.u}, tau={self.tau})"

    def _encode(self, pattern) -> tuple[int, ...] | None:
        if len(pattern) == 0:
            raise InvalidInputError("pattern must be non-empty")
        if self._bytes_text and isinstance(pattern, str):
            pattern = pattern.encode()
        return self.alphabet.encode_pattern(pattern)

    def _prepare(self, pattern, a: int, b: int, path: str):
        p = self._encode(pattern)
        iv = self.li.label_interval(a, b)
        m = len(p) if p is not None else len(pattern)
        if path not in ("auto", "short", "long"):
            raise ValueError(f"unknown path {path!r}")
        if path == "short" and m > self.tau:
            raise ValueError(f"pattern longer than tau={self.tau} has no short path")
        short = path == "short" or (path == "auto" and m <= self.tau)
        return p, iv, short

    def _descend(self, p: tuple[int, ...], iv: tuple[int, int],
                 stats: QueryStats | None) -> _Trail:
        st, tts = self.st, self.tts
        tl, levels = st._tl, tts.levels
        lo, hi = iv[0] - 1, iv[1]          # half-open, in root-level coordinates
        v, d, m = st.root, 0, len(p)
        trail = _Trail()
        while True:
            c = p[d]
            w = st.child(v, c)
            if w is None:
                return trail
            rs = levels[tts.node_level[v]]
            clo = rs._rank(c, lo)
            chi = rs._rank(c, hi)
            if stats is not None:
                stats.edges += 1
                stats.rank_calls += 2
            if clo >= chi:
                return trail
            es = int(st.edge_start[w])
            end = min(m, int(st.depth[w]))
            if tl[es + 1: es + end - d] != p[d + 1:end]:
                return trail
            trail.steps.append((v, c, int(clo)))
            if end == m:
                trail.count = int(chi - clo)
                return trail
            off = tts.node_off[w] - tts.node_base[w]
            lo, hi = off + clo, off + chi
            v, d = w, end

    def _climb(self, trail: _Trail, stats: QueryStats | None) -> int:
        tts = self.tts
        v, c, clo = trail.steps[-1]
        p = tts.levels[tts.node_level[v]]._select(c, clo + 1)
        calls = 1
        node = v
        for parent, c, _ in reversed(trail.steps[:-1]):
            k = p - tts.node_off[node]
            p = tts.levels[tts.node_level[parent]]._select(c, tts.node_base[node] + k + 1)
            calls += 1
            node = parent
        if stats is not None:
            stats.select_calls += calls
        return int(tts.root_positions[p]) + 1

    def _long_window(self, p: tuple[int, ...]) -> tuple[int, int] | None:
        r = self.st.locus(p)
        if not r.matched:
            return None
        lo, hi = self.st.suffix_interval(r.locus_node)
        return lo - 1, hi - 1

    def count(self, pattern, a: int, b: int, *, path: str = "auto",
              stats: QueryStats | None = None) -> int:
        """Occurrences of ``pattern`` whose first character's label is in ``[a, b]``.

        ``path`` forces the node-string descent (``"short"``) or the
        locus-plus-rectangle route (``"long"``); ``"auto"`` picks by length.
        """
        p, iv, short = self._prepare(pattern, a, b, path)
        if stats is not None:
            stats.path = "short" if short else "long"
        if p is None or iv is None:
            return 0
        if short:
            return self._descend(p, iv, stats).count
        win = self._long_window(p)
        if win is None:
            return 0
        return self.rc.count_rect(win[0], win[1], a, b)

    def is_empty(self, pattern, a: int, b: int) -> bool:
        return self.count(pattern, a, b) == 0

    def report_one(self, pattern, a: int, b: int, *, path: str = "auto",
                   stats: QueryStats | None = None) -> int | None:
        """1-based start of some qualifying occurrence, or ``None`` if there is none."""
        p, iv, short = self._prepare(pattern, a, b, path)
        if stats is not None:
            stats.path = "short" if short else "long"
        if p is None or iv is None:
            return None
        if short:
            trail = self._descend(p, iv, stats)
            return self._climb(trail, stats) if trail.count else None
        win = self._long_window(p)
        if win is None:
            return None
        x = self.rc.find_point(win[0], win[1], a, b)
        return None if x is None else int(self.st.sa[x]) + 1

    def query(self, q: SrcQuery) -> int:
        return self.count(q.pattern, q.a, q.b)

    def _self_check(self) -> None:
        rng = random.Random(self.config.seed)
        text = self.lt.text
        for _ in range(self.config.self_check_queries):
            i = rng.randrange(self.n)
            m = rng.randint(1, min(2 * self.tau + 4, self.n - i))
            pat = text[i:i + m]
            a = rng.randint(0, self.u)
            b = rng.randint(a, self.u)
            got = self.count(pat, a, b)
            want = oracle.naive_count(self.lt, pat, a, b)
            if got != want:
                raise RuntimeError(f"self-check failed for {pat!r} [{a}, {b}]: {got} != {want}")


def build_index(lt: LabeledText, config: IndexConfig | None = None) -> SrcIndex:
    return SrcIndex(lt, config)


def count(idx: SrcIndex, q: SrcQuery) -> int:
    return idx.count(q.pattern, q.a, q.b)


def is_empty(idx: SrcIndex, q: SrcQuery) -> bool:
    return idx.is_empty(q.pattern, q.a, q.b)


def report_one(idx: SrcIndex, q: SrcQuery) -> int | None:
    return idx.report_one(q.pattern, q.a, q.b)
