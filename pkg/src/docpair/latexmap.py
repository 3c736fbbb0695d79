"""Unicode to LaTeX-command normalization backed by a bundled table."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

_TABLE_RESOURCE = "data/unicode_latex.json"


@lru_cache(maxsize=1)
def substitution_table() -> dict[str, str]:
    """The bundled codepoint -> LaTeX command map (version-pinned data file)."""
    raw = resources.files("docpair").joinpath(_TABLE_RESOURCE).read_text("utf-8")
    return dict(json.loads(raw)["map"])


@lru_cache(maxsize=1)
def _translation() -> dict[int, str]:
    return {ord(key): value for key, value in substitution_table().items()}


def unicode_to_latex(text: str) -> str:
    """Replace known non-ASCII codepoints with LaTeX commands.

    Codepoints outside the table pass through unchanged; ASCII is never
    touched.  Idempotent: replacement strings are pure ASCII, so a second
    pass finds nothing to substitute.
    """
    return text.translate(_translation())
