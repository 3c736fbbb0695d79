"""Gini-impurity page-break search over predicted paragraph labels.

Intervals are half-open ``[a, b)``.  The split search compares objective
values in exact rational arithmetic so that ties and near-ties resolve
identically to a brute-force scan.
"""

from __future__ import annotations

from typing import Sequence


def gini_measure(predictions: Sequence[int], a: int, b: int, page: int) -> float:
    """Interval-length-weighted impurity over labels ``page`` and ``page + 1``.

    ``(b - a) * (1 - p(page)^2 - p(page + 1)^2)`` where ``p(j)`` is the
    fraction of predictions in ``[a, b)`` equal to ``j``.
    """
    if not 0 <= a < b <= len(predictions):
        raise ValueError(f"invalid interval [{a}, {b}) for {len(predictions)} predictions")
    width = b - a
    count_cur = 0
    count_next = 0
    for label in predictions[a:b]:
        if label == page:
            count_cur += 1
        elif label == page + 1:
            count_next += 1
    return width - (count_cur * count_cur + count_next * count_next) / width


def best_split(predictions: Sequence[int], a: int, b: int, page: int) -> int:
    """Position ``t`` in ``(a, b)`` minimizing ``G[a,t](page) + G[t,b](page)``.

    Ties break to the smallest ``t``.  Single scan with prefix counts; the
    comparison maximizes the purity term as an exact fraction.
    """
    if not 0 <= a < b <= len(predictions):
        raise ValueError(f"invalid interval [{a}, {b}) for {len(predictions)} predictions")
    if b - a < 2:
        raise ValueError(f"interval [{a}, {b}) too small to split")
    total_cur = 0
    total_next = 0
    for label in predictions[a:b]:
        if label == page:
            total_cur += 1
        elif label == page + 1:
            total_next += 1

    # minimizing G_left + G_right = (b - a) - purity(t) means maximizing
    # purity(t) = sq_left/(t - a) + sq_right/(b - t), compared exactly via
    # cross-multiplied integers
    best_t = a + 1
    best_num = -1
    best_den = 1
    left_cur = 0
    left_next = 0
    for t in range(a + 1, b):
        label = predictions[t - 1]
        if label == page:
            left_cur += 1
        elif label == page + 1:
            left_next += 1
        sq_left = left_cur * left_cur + left_next * left_next
        right_cur = total_cur - left_cur
        right_next = total_next - left_next
        sq_right = right_cur * right_cur + right_next * right_next
        num = sq_left * (b - t) + sq_right * (t - a)
        den = (t - a) * (b - t)
        if num * best_den > best_num * den:
            best_t = t
            best_num = num
            best_den = den
    return best_t


def split_document(predictions: Sequence[int], num_pages: int) -> list[int]:
    """Break indices for every page transition, strictly increasing.

    Break ``i`` (starting page ``i + 1``) searches ``[previous break, n)``.
    A split landing at or before the previous break is advanced past it, and
    breaks are capped so the remaining pages still fit.
    """
    n = len(predictions)
    if num_pages < 1:
        raise ValueError("num_pages must be >= 1")
    if num_pages > n:
        raise ValueError(f"more pages ({num_pages}) than paragraphs ({n})")
    breaks: list[int] = []
    prev = 0
    for page in range(1, num_pages):
        if n - prev >= 2:
            t = best_split(predictions, prev, n, page)
        else:
            t = prev + 1
        t = max(t, prev + 1)
        t = min(t, n - num_pages + page)
        breaks.append(t)
        prev = t
    return breaks
