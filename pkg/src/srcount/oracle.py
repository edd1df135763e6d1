"""Brute-force reference answers.

Every function scans the text directly, character by character, and shares
no code with the index. Positions are 1-based.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _coerce(text, pattern):
    if isinstance(text, (bytes, bytearray)) and isinstance(pattern, str):
        return pattern.encode()
    return pattern


def occurs_at(text: Sequence, pattern: Sequence, i: int) -> bool:
    """Whether ``pattern`` starts at 1-based position ``i`` of ``text``."""
    pattern = _coerce(text, pattern)
    if i < 1 or i - 1 + len(pattern) > len(text):
        return False
    for k in range(len(pattern)):
        if text[i - 1 + k] != pattern[k]:
            return False
    return True


def naive_occurrences(lt, pattern, a: int, b: int) -> list[int]:
    """Start positions of ``pattern`` whose first character's label is in ``[a, b]``."""
    return [
        i for i in range(1, len(lt.text) + 1)
        if a <= lt.labels[i - 1] <= b and occurs_at(lt.text, pattern, i)
    ]


def naive_count(lt, pattern, a: int, b: int) -> int:
    return len(naive_occurrences(lt, pattern, a, b))


def naive_prsc(text, pattern, i: int, j: int) -> int:
    return sum(1 for p in range(i, j + 1) if occurs_at(text, pattern, p))


def naive_intervals(text, intervals: Iterable[tuple[int, int]], pattern, i: int, j: int) -> int:
    spans = list(intervals)
    return sum(
        1 for p in range(i, j + 1)
        if any(s <= p <= e for s, e in spans) and occurs_at(text, pattern, p)
    )


def naive_gaps(text, d: int, p1, p2) -> int:
    p1 = _coerce(text, p1)
    return sum(
        1 for p in range(1, len(text) + 1)
        if occurs_at(text, p1, p) and occurs_at(text, p2, p + len(p1) + d)
    )


def naive_aligned(text1, text2, p1, p2) -> int:
    return sum(
        1 for i in range(1, min(len(text1), len(text2)) + 1)
        if occurs_at(text1, p1, i) and occurs_at(text2, p2, i)
    )
