"""Levenshtein distance and approximate substring search.

The substring search finds the best approximate occurrence of a short
pattern inside a longer text (edit distance with a free start position),
reporting either the end or the start of the best occurrence.  Long inputs
are handled with a vectorized row recurrence; the horizontal (insertion)
dependency is resolved with the running-minimum identity
``row[j] = j + min_{k<=j}(cand[k] - k)``.
"""

from __future__ import annotations

import numpy as np

_NUMPY_CUTOVER = 64


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance between two strings."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a
    if len(a) >= _NUMPY_CUTOVER:
        return _levenshtein_numpy(a, b)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cost = 0 if ca == cb else 1
            cur.append(min(prev[j] + 1, cur[-1] + 1, prev[j - 1] + cost))
        prev = cur
    return prev[-1]


def _levenshtein_numpy(a: str, b: str) -> int:
    arr = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)
    n = len(b)
    offsets = np.arange(n + 1, dtype=np.int64)
    prev = offsets.copy()
    cand = np.empty(n + 1, dtype=np.int64)
    for i, ca in enumerate(a, 1):
        cand[0] = i
        np.minimum(prev[:-1] + (arr != ord(ca)), prev[1:] + 1, out=cand[1:])
        prev = np.minimum.accumulate(cand - offsets) + offsets
    return int(prev[-1])


def normalized_levenshtein(a: str, b: str) -> float:
    """Edit distance scaled by the longer length; 0.0 for two empty strings."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    return levenshtein(a, b) / longest


def _substring_end_row(pattern: str, text: str) -> np.ndarray:
    """Final DP row: row[j] = min distance of pattern vs a text substring ending at j."""
    arr = np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)
    n = len(text)
    offsets = np.arange(n + 1, dtype=np.int64)
    prev = np.zeros(n + 1, dtype=np.int64)
    cand = np.empty(n + 1, dtype=np.int64)
    for i, ca in enumerate(pattern, 1):
        cand[0] = i
        np.minimum(prev[:-1] + (arr != ord(ca)), prev[1:] + 1, out=cand[1:])
        prev = np.minimum.accumulate(cand - offsets) + offsets
    return prev


def best_match_end(pattern: str, text: str) -> tuple[int, int]:
    """Best approximate occurrence of ``pattern`` in ``text``, by match end.

    Returns ``(end_index, distance)`` where ``text[:end_index]`` is the
    prefix closing the best match.  Ties break to the smallest end index.
    """
    if not pattern:
        raise ValueError("pattern must be non-empty")
    row = _substring_end_row(pattern, text)
    end = int(np.argmin(row))
    return end, int(row[end])


def best_match_start(pattern: str, text: str) -> tuple[int, int]:
    """Best approximate occurrence of ``pattern`` in ``text``, by match start.

    Returns ``(start_index, distance)``.  Ties break to the largest start
    index (the match closest to the end of ``text``).
    """
    if not pattern:
        raise ValueError("pattern must be non-empty")
    row = _substring_end_row(pattern[::-1], text[::-1])
    rev_end = int(np.argmin(row))
    return len(text) - rev_end, int(row[rev_end])
