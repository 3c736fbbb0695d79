"""Fuzzy refinement of coarse page breaks and page acceptance scoring."""

from __future__ import annotations

from dataclasses import dataclass, replace

from docpair.fuzzy import best_match_end, best_match_start

DEFAULT_WINDOW = 2000
DEFAULT_MAX_DISTANCE_RATIO = 0.3
ACCEPT_THRESHOLD = 0.9


@dataclass(frozen=True)
class SplitSolution:
    """Per-document break positions with refinement and acceptance state.

    ``breaks`` are strictly increasing paragraph (or character) indices;
    break ``i`` starts page ``i + 2`` when 0-indexed.  ``scores`` holds the
    per-break refinement score in [0, 1]; ``page_scores`` and ``accepted``
    are filled by :func:`score_and_accept`.
    """

    breaks: tuple[int, ...]
    scores: tuple[float, ...]
    page_scores: tuple[float, ...] = ()
    accepted: tuple[bool, ...] = ()

    def __post_init__(self):
        if len(self.breaks) != len(self.scores):
            raise ValueError("breaks and scores must have equal length")
        if any(x >= y for x, y in zip(self.breaks, self.breaks[1:])):
            raise ValueError("breaks must be strictly increasing")
        if any(not 0.0 <= s <= 1.0 for s in self.scores):
            raise ValueError("scores must lie in [0, 1]")


def refine_break(
    source_text: str,
    coarse_char_pos: int,
    prev_page_tail: str,
    next_page_head: str,
    window: int = DEFAULT_WINDOW,
    max_distance_ratio: float = DEFAULT_MAX_DISTANCE_RATIO,
) -> tuple[int, float]:
    """Exact cut position near a coarse break, scored in [0, 1].

    Searches ``window`` characters on each side of ``coarse_char_pos`` for
    the best approximate occurrence of the previous page's tail (cut at its
    end) and the next page's head (cut at its start).  Matches worse than
    ``max_distance_ratio`` of the pattern length are discarded.  Coinciding
    cuts score 1; otherwise the cut with the smaller normalized distance
    wins and scores 1 minus that distance; no match at all keeps the coarse
    position with score 0.
    """
    lo = max(0, coarse_char_pos - window)
    hi = min(len(source_text), coarse_char_pos + window)
    segment = source_text[lo:hi]

    tail_cut = tail_norm = None
    if prev_page_tail and segment:
        end, dist = best_match_end(prev_page_tail, segment)
        if dist <= max_distance_ratio * len(prev_page_tail):
            tail_cut = lo + end
            tail_norm = dist / len(prev_page_tail)

    head_cut = head_norm = None
    if next_page_head and segment:
        start, dist = best_match_start(next_page_head, segment)
        if dist <= max_distance_ratio * len(next_page_head):
            head_cut = lo + start
            head_norm = dist / len(next_page_head)

    if tail_cut is None and head_cut is None:
        return coarse_char_pos, 0.0
    if tail_cut is not None and head_cut is not None:
        if tail_cut == head_cut:
            return tail_cut, 1.0
        if head_norm < tail_norm:
            return head_cut, 1.0 - head_norm
        return tail_cut, 1.0 - tail_norm
    if tail_cut is not None:
        return tail_cut, 1.0 - tail_norm
    return head_cut, 1.0 - head_norm


def score_and_accept(solution: SplitSolution, threshold: float = ACCEPT_THRESHOLD) -> SplitSolution:
    """Fill per-page scores and acceptance flags.

    A page's score is the mean of its two boundary scores; the document's
    first and last boundary score 1 by definition.  Pages with a score of at
    least ``threshold`` are accepted.
    """
    boundary = (1.0, *solution.scores, 1.0)
    page_scores = tuple(
        (boundary[k] + boundary[k + 1]) / 2.0 for k in range(len(boundary) - 1)
    )
    accepted = tuple(score >= threshold for score in page_scores)
    return replace(solution, page_scores=page_scores, accepted=accepted)
