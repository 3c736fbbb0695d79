"""Page alignment: classifier-guided splitting plus fuzzy refinement."""

from docpair.align.bow import (
    LinearPageClassifier,
    PageObservation,
    TfIdfVectorizer,
    clean_page_lines,
    fit_page_classifier,
    predict_paragraph_pages,
    tokenize,
)
from docpair.align.floats import (
    FloatRecord,
    float_caption,
    match_floats,
    reinsert_floats,
    remove_floats,
)
from docpair.align.gini import best_split, gini_measure, split_document
from docpair.align.pipeline import AlignerParams, PageText, PairedPage, align_document
from docpair.align.refine import (
    ACCEPT_THRESHOLD,
    SplitSolution,
    refine_break,
    score_and_accept,
)

__all__ = [
    "ACCEPT_THRESHOLD",
    "AlignerParams",
    "FloatRecord",
    "LinearPageClassifier",
    "PageObservation",
    "PageText",
    "PairedPage",
    "SplitSolution",
    "TfIdfVectorizer",
    "align_document",
    "best_split",
    "clean_page_lines",
    "fit_page_classifier",
    "float_caption",
    "gini_measure",
    "match_floats",
    "predict_paragraph_pages",
    "refine_break",
    "reinsert_floats",
    "remove_floats",
    "score_and_accept",
    "split_document",
    "tokenize",
]
