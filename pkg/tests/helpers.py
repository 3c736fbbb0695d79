"""Shared test oracles, independent of the library code paths they check."""

from __future__ import annotations

import random
from fractions import Fraction

from docpair import markup as mk


def gini_fraction(predictions, a: int, b: int, page: int) -> Fraction:
    """Exact-rational Gini measure, straight from the formula."""
    width = b - a
    cur = sum(1 for x in predictions[a:b] if x == page)
    nxt = sum(1 for x in predictions[a:b] if x == page + 1)
    p_cur = Fraction(cur, width)
    p_nxt = Fraction(nxt, width)
    return width * (1 - p_cur * p_cur - p_nxt * p_nxt)


def brute_best_split(predictions, a: int, b: int, page: int) -> int:
    """Exhaustive argmin of the two-sided Gini objective; first minimum wins."""
    best_t = None
    best_val = None
    for t in range(a + 1, b):
        val = gini_fraction(predictions, a, t, page) + gini_fraction(predictions, t, b, page)
        if best_val is None or val < best_val:
            best_t, best_val = t, val
    return best_t


def noisy_staircase(
    rng: random.Random, paragraphs: int, pages: int, noise: float
) -> tuple[list[int], list[int]]:
    """Label staircase with uniform label noise; returns (labels, true breaks)."""
    per_page = paragraphs // pages
    labels = []
    breaks = []
    for p in range(1, pages + 1):
        count = per_page if p < pages else paragraphs - per_page * (pages - 1)
        labels.extend([p] * count)
        if p < pages:
            breaks.append(per_page * p)
    noisy = [
        rng.randint(1, pages) if rng.random() < noise else label for label in labels
    ]
    return noisy, breaks


def levenshtein_matrix(a: str, b: str) -> int:
    """Full-matrix DP edit distance; the reference oracle."""
    m, n = len(a), len(b)
    dist = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        dist[i][0] = i
    for j in range(n + 1):
        dist[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            dist[i][j] = min(
                dist[i - 1][j] + 1,
                dist[i][j - 1] + 1,
                dist[i - 1][j - 1] + cost,
            )
    return dist[m][n]


def brute_substring_end(pattern: str, text: str) -> tuple[int, int]:
    """Best (end, distance) over every substring, via the matrix oracle."""
    best = (0, len(pattern))
    for end in range(len(text) + 1):
        for start in range(end + 1):
            d = levenshtein_matrix(pattern, text[start:end])
            if d < best[1]:
                best = (end, d)
    return best


# --- random canonical documents for round-trip checks

_SAFE_CHARS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,;:!?()+-="
_MATH_CHARS = "abcdefxyz0123456789^{}_=+-"


def _safe_text(rng: random.Random, lo=1, hi=24) -> str:
    n = rng.randint(lo, hi)
    text = "".join(rng.choice(_SAFE_CHARS) for _ in range(n)).strip()
    text = " ".join(text.split())
    if not text or text.startswith("#") or text.startswith("Figure:"):
        return "x" + text
    return text


def _math_text(rng: random.Random) -> str:
    return "".join(rng.choice(_MATH_CHARS) for _ in range(rng.randint(1, 16)))


def random_spans(rng: random.Random) -> tuple:
    spans = []
    last_kind = None
    for _ in range(rng.randint(1, 5)):
        kind = rng.choice([mk.PLAIN, mk.PLAIN, mk.BOLD, mk.ITALIC, mk.INLINE_MATH])
        if kind == last_kind:
            kind = mk.INLINE_MATH if kind != mk.INLINE_MATH else mk.PLAIN
        # consecutive inline-math spans reparse as one, so avoid those too
        if kind == mk.INLINE_MATH and last_kind == mk.INLINE_MATH:
            kind = mk.PLAIN
        text = _math_text(rng) if kind == mk.INLINE_MATH else _safe_text(rng)
        spans.append(mk.InlineSpan(kind, text))
        last_kind = kind
    return mk.merge_spans(spans)


def random_document(rng: random.Random, max_blocks: int = 8) -> mk.MarkupDocument:
    blocks = []
    for _ in range(rng.randint(1, max_blocks)):
        kind = rng.choice(
            [mk.PARAGRAPH, mk.PARAGRAPH, mk.HEADING, mk.DISPLAY_MATH, mk.TABLE, mk.FIGURE_CAPTION]
        )
        if kind == mk.HEADING:
            blocks.append(mk.heading(rng.randint(1, 6), random_spans(rng)))
        elif kind == mk.PARAGRAPH:
            blocks.append(mk.paragraph(random_spans(rng)))
        elif kind == mk.DISPLAY_MATH:
            blocks.append(mk.display_math(_math_text(rng)))
        elif kind == mk.TABLE:
            rows = [" & ".join(_safe_text(rng, 1, 8) for _ in range(2)) for _ in range(2)]
            blocks.append(mk.table(" \\\\\n".join(rows)))
        else:
            blocks.append(mk.figure_caption(random_spans(rng)))
    return mk.MarkupDocument(blocks=tuple(blocks), source_id="fixture")
