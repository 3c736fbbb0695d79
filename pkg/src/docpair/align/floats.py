"""Float (figure/table) removal before splitting and caption-matched reinsertion."""

from __future__ import annotations

import re
from dataclasses import dataclass

from docpair.fuzzy import levenshtein, normalized_levenshtein
from docpair.markup import FIGURE_CAPTION, TABLE, Block, MarkupDocument

FLOAT_KINDS = (TABLE, FIGURE_CAPTION)
_KIND_OF_BLOCK = {TABLE: "table", FIGURE_CAPTION: "figure"}
_CAPTION_CMD_RE = re.compile(r"\\caption\{([^{}]*)\}")

DEFAULT_MAX_DISTANCE_RATIO = 0.3


@dataclass(frozen=True)
class FloatRecord:
    """A caption detected on a PDF page by an external figure extractor."""

    caption_text: str
    page_index: int
    kind: str  # "figure" | "table"

    def __post_init__(self):
        if not self.caption_text:
            raise ValueError("caption_text must be non-empty")
        if self.kind not in ("figure", "table"):
            raise ValueError(f"kind must be 'figure' or 'table', got {self.kind!r}")


def remove_floats(doc: MarkupDocument) -> tuple[MarkupDocument, list[tuple[int, Block]]]:
    """Strip table and figure-caption blocks, returning them with their indices."""
    removed: list[tuple[int, Block]] = []
    kept: list[Block] = []
    for index, block in enumerate(doc.blocks):
        if block.kind in FLOAT_KINDS:
            removed.append((index, block))
        else:
            kept.append(block)
    return MarkupDocument(tuple(kept), doc.source_id), removed


def float_caption(block: Block) -> str:
    """Caption text of a float block.

    Figure captions are their own text; tables use a ``\\caption{...}``
    body when present, otherwise the whole table body.
    """
    if block.kind == FIGURE_CAPTION:
        return block.text()
    match = _CAPTION_CMD_RE.search(block.latex)
    return match.group(1) if match else block.latex


def match_floats(
    removed: list[tuple[int, Block]],
    records: list[FloatRecord],
    max_distance_ratio: float = DEFAULT_MAX_DISTANCE_RATIO,
) -> list[tuple[int, Block]]:
    """Assign each removed float to a page.

    ``removed`` pairs each float with the page the coarse split assigned it.
    A float moves to the page of the same-kind record with the minimum
    Levenshtein distance between captions, provided the normalized distance
    is at most ``max_distance_ratio``; otherwise it stays on its coarse page.
    """
    placed: list[tuple[int, Block]] = []
    for coarse_page, block in removed:
        caption = float_caption(block)
        want_kind = _KIND_OF_BLOCK[block.kind]
        best_record = None
        best_dist = None
        for record in records:
            if record.kind != want_kind:
                continue
            dist = levenshtein(caption, record.caption_text)
            if best_dist is None or dist < best_dist:
                best_record = record
                best_dist = dist
        page = coarse_page
        if best_record is not None:
            if normalized_levenshtein(caption, best_record.caption_text) <= max_distance_ratio:
                page = best_record.page_index
        placed.append((page, block))
    return placed


def reinsert_floats(
    pages: list[MarkupDocument],
    removed: list[tuple[int, Block]],
    records: list[FloatRecord],
    max_distance_ratio: float = DEFAULT_MAX_DISTANCE_RATIO,
) -> list[MarkupDocument]:
    """Append each removed float at the end of its matched page.

    ``removed`` carries (coarse page, block) pairs as produced by the split;
    see :func:`match_floats` for the matching rule.  Page indices out of
    range are clamped.
    """
    blocks_by_page = [list(page.blocks) for page in pages]
    for page, block in match_floats(removed, records, max_distance_ratio):
        slot = min(max(page, 1), len(pages)) - 1
        blocks_by_page[slot].append(block)
    return [
        MarkupDocument(tuple(blocks), page.source_id)
        for blocks, page in zip(blocks_by_page, pages)
    ]
