"""Orthogonal range counting over points ``(x, y)`` with one point per ``x``.

The y-values are replaced by their ranks among the distinct y-values and
stored in a wavelet matrix, so a rectangle count is two ``count_less``
descents, ``O(log n)`` each.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Sequence

import numpy as np

from .rank_select import RankSelectString


class RangeCounter2D:
    """Points ``(x, ys[x - 1])`` for ``x = 1..len(ys)``."""

    def __init__(self, ys: Sequence[int] | np.ndarray):
        arr = np.asarray(ys, dtype=np.int64).reshape(-1)
        vals = np.unique(arr)
        self.n_points = int(arr.size)
        self.distinct = [int(v) for v in vals]
        dense = np.searchsorted(vals, arr)
        self.ys = RankSelectString(dense, max(1, len(self.distinct)))

    def _window(self, x1: int, x2: int, y1: int, y2: int):
        x1 = max(x1, 1)
        x2 = min(x2, self.n_points)
        if x1 > x2 or y1 > y2:
            return None
        k1 = bisect_left(self.distinct, y1)
        k2 = bisect_right(self.distinct, y2)
        if k1 >= k2:
            return None
        return x1 - 1, x2, k1, k2

    def count_rect(self, x1: int, x2: int, y1: int, y2: int) -> int:
        """Points with ``x1 <= x <= x2`` and ``y1 <= y <= y2``."""
        w = self._window(x1, x2, y1, y2)
        if w is None:
            return 0
        s, e, k1, k2 = w
        return self.ys.count_less(s, e, k2) - self.ys.count_less(s, e, k1)

    def find_point(self, x1: int, x2: int, y1: int, y2: int) -> int | None:
        """Some ``x`` whose point lies in the rectangle, or ``None``."""
        w = self._window(x1, x2, y1, y2)
        if w is None:
            return None
        s, e, k1, k2 = w
        below = self.ys.count_less(s, e, k1)
        if self.ys.count_less(s, e, k2) == below:
            return None
        v = self.ys.quantile(s, e, below)
        return int(self.ys._select(v, self.ys._rank(v, s) + 1)) + 1


def build_2d(ys: Sequence[int] | np.ndarray) -> RangeCounter2D:
    return RangeCounter2D(ys)
