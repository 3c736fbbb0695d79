"""Single-document alignment: markup in, scored per-page markdown out."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from docpair.align.bow import (
    PageObservation,
    clean_page_lines,
    fit_page_classifier,
    predict_paragraph_pages,
)
from docpair.align.floats import FloatRecord, match_floats, remove_floats
from docpair.align.gini import split_document
from docpair.align.refine import (
    ACCEPT_THRESHOLD,
    DEFAULT_MAX_DISTANCE_RATIO,
    DEFAULT_WINDOW,
    SplitSolution,
    refine_break,
    score_and_accept,
)
from docpair.latexmap import unicode_to_latex
from docpair.markup import MarkupDocument, _serialize_block, serialize_markdown


@dataclass(frozen=True)
class AlignerParams:
    """Tunables for page alignment; defaults are config-exposed, not fixed."""

    fuzzy_window: int = DEFAULT_WINDOW
    max_distance_ratio: float = DEFAULT_MAX_DISTANCE_RATIO
    boundary_chars: int = 128
    accept_threshold: float = ACCEPT_THRESHOLD
    svm_regularization: float = 1e-4
    svm_epochs: int = 20
    svm_eta0: float = 0.5
    header_repeat_fraction: float = 0.5


@dataclass(frozen=True)
class PageText:
    """Embedded text of one PDF page."""

    page: int
    lines: tuple[str, ...]


@dataclass(frozen=True)
class PairedPage:
    page: int
    markdown: str
    score: float
    accepted: bool


def split_paragraphs(text: str) -> list[tuple[int, str]]:
    """Blank-line-separated chunks with their character offsets."""
    out: list[tuple[int, str]] = []
    offset = 0
    for part in text.split("\n\n"):
        out.append((offset, part))
        offset += len(part) + 2
    return out


def align_document(
    doc: MarkupDocument,
    pdf_pages: list[PageText],
    float_records: list[FloatRecord],
    params: AlignerParams = AlignerParams(),
    seed: int = 0,
) -> list[PairedPage]:
    """Split a document into pages matching the PDF and score each page.

    Floats are removed up front and appended back to the end of their
    matched pages.  Raises ``FitError``/``ValueError`` when the document
    cannot be aligned at all (e.g. fewer paragraphs than pages).
    """
    pages_sorted = sorted(pdf_pages, key=lambda p: p.page)
    num_pages = len(pages_sorted)
    if num_pages == 0:
        raise ValueError("no PDF pages supplied")

    body, removed = remove_floats(doc)
    markdown = serialize_markdown(body)

    if num_pages == 1:
        page_md = _append_floats(markdown, [block for _, block in removed])
        return [PairedPage(page=1, markdown=page_md, score=1.0, accepted=True)]

    cleaned = clean_page_lines(
        [list(p.lines) for p in pages_sorted],
        repeat_page_fraction=params.header_repeat_fraction,
    )
    normalized = [[unicode_to_latex(line) for line in lines] for lines in cleaned]
    observations = [
        PageObservation(line, pages_sorted[i].page)
        for i, lines in enumerate(normalized)
        for line in lines
    ]
    vectorizer, classifier = fit_page_classifier(
        observations,
        regularization=params.svm_regularization,
        epochs=params.svm_epochs,
        eta0=params.svm_eta0,
        seed=seed,
    )

    paragraphs = split_paragraphs(markdown)
    predictions = predict_paragraph_pages(
        vectorizer, classifier, [text for _, text in paragraphs]
    )
    breaks = split_document(predictions, num_pages)

    page_text = ["\n".join(lines) for lines in normalized]
    cuts: list[int] = []
    scores: list[float] = []
    prev_cut = 0
    for k, t in enumerate(breaks):
        coarse = paragraphs[t][0] if t < len(paragraphs) else len(markdown)
        tail = page_text[k][-params.boundary_chars :]
        head = page_text[k + 1][: params.boundary_chars]
        pos, score = refine_break(
            markdown,
            coarse,
            tail,
            head,
            window=params.fuzzy_window,
            max_distance_ratio=params.max_distance_ratio,
        )
        pos = min(max(pos, prev_cut), len(markdown))
        cuts.append(pos)
        scores.append(score)
        prev_cut = pos

    solution = score_and_accept(
        SplitSolution(breaks=tuple(breaks), scores=tuple(scores)),
        threshold=params.accept_threshold,
    )

    # floats fall back to the page their source position was assigned to
    removed_with_pages: list[tuple[int, object]] = []
    floats_before = 0
    for original_index, block in removed:
        para_pos = min(original_index - floats_before, max(len(paragraphs) - 1, 0))
        floats_before += 1
        coarse_page = 1 + bisect_right(breaks, para_pos)
        removed_with_pages.append((coarse_page, block))
    placements = match_floats(
        removed_with_pages, float_records, params.max_distance_ratio
    )

    bounds = [0, *cuts, len(markdown)]
    page_markdown = [markdown[bounds[k] : bounds[k + 1]] for k in range(num_pages)]
    for page, block in placements:
        slot = min(max(page, 1), num_pages) - 1
        page_markdown[slot] = _append_floats(page_markdown[slot], [block])

    return [
        PairedPage(
            page=pages_sorted[k].page,
            markdown=page_markdown[k],
            score=solution.page_scores[k],
            accepted=solution.accepted[k],
        )
        for k in range(num_pages)
    ]


def _append_floats(page_markdown: str, blocks) -> str:
    for block in blocks:
        rendered = _serialize_block(block)
        if page_markdown.strip():
            page_markdown = page_markdown.rstrip("\n") + "\n\n" + rendered + "\n"
        else:
            page_markdown = rendered + "\n"
    return page_markdown
