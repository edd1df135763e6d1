"""Map label intervals to position intervals of the label-sorted string."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Sequence

import numpy as np

from .errors import InvalidInputError


class LabelIndex:
    """Sorted distinct labels with cumulative frequencies.

    ``cum_freq[k]`` is the number of characters whose label is at most
    ``distinct_labels[k]``. Lookups are binary searches.
    """

    def __init__(self, labels: Sequence[int] | np.ndarray, u: int | None = None):
        arr = np.asarray(labels, dtype=np.int64).reshape(-1)
        if arr.size and arr.min() < 0:
            raise InvalidInputError("labels must be non-negative")
        top = int(arr.max()) if arr.size else 0
        self.u = top if u is None else int(u)
        if top > self.u:
            raise InvalidInputError(f"label {top} exceeds universe bound {self.u}")
        vals, counts = np.unique(arr, return_counts=True)
        self.distinct_labels = [int(x) for x in vals]
        self.cum_freq = [int(x) for x in np.cumsum(counts)]
        self.n = int(arr.size)

    def _check(self, a: int, b: int) -> None:
        for x in (a, b):
            if x < 0 or x > self.u:
                raise InvalidInputError(f"label {x} outside [0, {self.u}]")

    def rank_interval(self, a: int, b: int) -> tuple[int, int] | None:
        """0-based half-open range of distinct-label ranks within ``[a, b]``."""
        self._check(a, b)
        if a > b:
            return None
        k1 = bisect_left(self.distinct_labels, a)
        k2 = bisect_right(self.distinct_labels, b)
        if k1 >= k2:
            return None
        return k1, k2

    def label_interval(self, a: int, b: int) -> tuple[int, int] | None:
        """1-based inclusive positions in the label-sorted string with labels in ``[a, b]``."""
        r = self.rank_interval(a, b)
        if r is None:
            return None
        k1, k2 = r
        lo = (self.cum_freq[k1 - 1] if k1 else 0) + 1
        return lo, self.cum_freq[k2 - 1]
