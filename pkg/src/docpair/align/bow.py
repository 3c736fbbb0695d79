"""Bag-of-words page classifier: TF-IDF features, one-vs-rest linear SVM.

The SVM is trained by averaged stochastic subgradient descent on the hinge
loss with L2 regularization, which keeps fitting deterministic under a
fixed shuffle seed and free of solver dependencies.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

_TOKEN_RE = re.compile(r"[a-z0-9]+")
MIN_TOKEN_LENGTH = 2


class FitError(ValueError):
    """Raised when the classifier cannot be fitted to the observations."""


@dataclass(frozen=True)
class PageObservation:
    """One extracted PDF text line labelled with its 1-based page index."""

    line_text: str
    page_index: int

    def __post_init__(self):
        if self.page_index < 1:
            raise ValueError(f"page_index must be >= 1, got {self.page_index}")


def tokenize(text: str) -> list[str]:
    """Lowercase, split on non-alphanumeric runs, drop tokens shorter than 2."""
    return [t for t in _TOKEN_RE.findall(text.lower()) if len(t) >= MIN_TOKEN_LENGTH]


class TfIdfVectorizer:
    """TF-IDF with smoothed idf ``ln((1+D)/(1+df)) + 1`` and L2-normalized rows."""

    def __init__(self, vocabulary: dict[str, int], idf: np.ndarray):
        self.vocabulary = vocabulary
        self.idf = idf

    @classmethod
    def fit(cls, lines: list[str]) -> "TfIdfVectorizer":
        df: Counter[str] = Counter()
        for line in lines:
            df.update(set(tokenize(line)))
        if not df:
            raise FitError("empty vocabulary: no token of length >= 2 in any line")
        vocabulary = {token: col for col, token in enumerate(sorted(df))}
        n_docs = len(lines)
        idf = np.empty(len(vocabulary))
        for token, col in vocabulary.items():
            idf[col] = math.log((1 + n_docs) / (1 + df[token])) + 1.0
        return cls(vocabulary, idf)

    def transform_one(self, text: str) -> tuple[np.ndarray, np.ndarray]:
        """Sparse L2-normalized vector as (column indices, values)."""
        counts = Counter(tokenize(text))
        cols = []
        vals = []
        for token, count in counts.items():
            col = self.vocabulary.get(token)
            if col is not None:
                cols.append(col)
                vals.append(count * self.idf[col])
        if not cols:
            return np.empty(0, dtype=np.intp), np.empty(0)
        order = np.argsort(cols)
        idx = np.asarray(cols, dtype=np.intp)[order]
        val = np.asarray(vals, dtype=np.float64)[order]
        norm = np.linalg.norm(val)
        if norm > 0:
            val = val / norm
        return idx, val


@dataclass
class LinearPageClassifier:
    """One weight vector and bias per page label; argmax prediction.

    Ties break toward the lower page index (labels are sorted ascending and
    ``argmax`` returns the first maximum).
    """

    labels: np.ndarray
    weights: np.ndarray  # (n_labels, vocab_size)
    bias: np.ndarray  # (n_labels,)

    def decision_one(self, idx: np.ndarray, val: np.ndarray) -> np.ndarray:
        if idx.size == 0:
            return self.bias.copy()
        return self.weights[:, idx] @ val + self.bias

    def predict_one(self, idx: np.ndarray, val: np.ndarray) -> int:
        return int(self.labels[int(np.argmax(self.decision_one(idx, val)))])


def fit_page_classifier(
    observations: list[PageObservation],
    *,
    regularization: float = 1e-4,
    epochs: int = 20,
    eta0: float = 0.5,
    seed: int = 0,
) -> tuple[TfIdfVectorizer, LinearPageClassifier]:
    """Fit TF-IDF + one-vs-rest hinge-loss SVM to labelled PDF lines.

    Preprocessing (page-number and header/footer removal) is assumed to have
    happened already; see :func:`clean_page_lines`.
    """
    if not observations:
        raise FitError("no observations")
    page_count = max(obs.page_index for obs in observations)
    seen = {obs.page_index for obs in observations}
    for page in range(1, page_count + 1):
        if page not in seen:
            raise FitError(f"page {page} has zero observations")

    lines = [obs.line_text for obs in observations]
    vectorizer = TfIdfVectorizer.fit(lines)
    rows = [vectorizer.transform_one(line) for line in lines]
    labels = np.array(sorted(seen), dtype=np.int64)
    label_col = {int(lab): c for c, lab in enumerate(labels)}
    n = len(rows)
    n_labels = len(labels)
    vocab_size = len(vectorizer.vocabulary)

    # y[c, i] = +1 when observation i belongs to label c, else -1
    ymat = -np.ones((n_labels, n))
    for i, obs in enumerate(observations):
        ymat[label_col[obs.page_index], i] = 1.0

    rng = np.random.default_rng(seed)
    weights = np.zeros((n_labels, vocab_size))
    bias = np.zeros(n_labels)
    weights_sum = np.zeros_like(weights)
    bias_sum = np.zeros_like(bias)
    step = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            step += 1
            eta = eta0 / (1.0 + eta0 * regularization * step)
            idx, val = rows[i]
            scores = weights[:, idx] @ val + bias
            violating = ymat[:, i] * scores < 1.0
            weights *= 1.0 - eta * regularization
            if violating.any():
                weights[np.ix_(violating, idx)] += eta * np.outer(ymat[violating, i], val)
                bias[violating] += eta * ymat[violating, i]
            weights_sum += weights
            bias_sum += bias
    classifier = LinearPageClassifier(labels, weights_sum / step, bias_sum / step)
    return vectorizer, classifier


def predict_paragraph_pages(
    vectorizer: TfIdfVectorizer,
    classifier: LinearPageClassifier,
    paragraphs: list[str],
) -> list[int]:
    """Predict one page label per paragraph.

    Paragraphs with no in-vocabulary token inherit the previous paragraph's
    label; the first paragraph defaults to page 1.
    """
    labels: list[int] = []
    prev = 1
    for text in paragraphs:
        idx, val = vectorizer.transform_one(text)
        label = prev if idx.size == 0 else classifier.predict_one(idx, val)
        labels.append(label)
        prev = label
    return labels


_BARE_NUMBER_RE = re.compile(r"^\s*\d+\s*$")


def clean_page_lines(
    pages: list[list[str]], *, repeat_page_fraction: float = 0.5
) -> list[list[str]]:
    """Drop page numbers and repeated header/footer lines.

    A line is furniture when it is a bare number, or when its stripped text
    repeats verbatim on at least ``repeat_page_fraction`` of the pages.
    """
    page_count = len(pages)
    appears_on = Counter()
    for lines in pages:
        for text in {line.strip() for line in lines if line.strip()}:
            appears_on[text] += 1
    threshold = max(2, math.ceil(page_count * repeat_page_fraction))
    repeated = {text for text, count in appears_on.items() if count >= threshold}
    cleaned = []
    for lines in pages:
        kept = [
            line
            for line in lines
            if line.strip()
            and not _BARE_NUMBER_RE.match(line)
            and line.strip() not in repeated
        ]
        cleaned.append(kept)
    return cleaned
