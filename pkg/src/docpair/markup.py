"""Lightweight markup document model.

A :class:`MarkupDocument` is an ordered sequence of blocks (headings,
paragraphs, display math, tables, figure captions) whose textual content is
a flat run of styled inline spans.  The module converts a fixed subset of
LaTeXML-style HTML into this model, serializes it to Markdown-with-LaTeX,
parses that Markdown back (round-trip closed on the canonical subset), and
splits serialized text into the three evaluation modalities.

Canonical serialization grammar:

* heading level n   -> ``#`` * n + space + inline text
* bold / italic     -> ``**...**`` / ``_..._``
* inline math       -> ``\\(...\\)``   (``$...$`` accepted on input only)
* display math      -> ``\\[`` and ``\\]`` on their own lines
* table             -> verbatim body between ``\\begin{table}`` / ``\\end{table}`` lines
* figure caption    -> line prefixed ``Figure:``
* blocks separated by one blank line, LF endings

Round-trip closure holds for canonical documents: no empty spans or blocks,
no adjacent same-kind spans, span text free of delimiter sequences, and
paragraphs not starting with heading/caption prefixes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from html.parser import HTMLParser

HEADING = "heading"
PARAGRAPH = "paragraph"
DISPLAY_MATH = "display_math"
TABLE = "table"
FIGURE_CAPTION = "figure_caption"

PLAIN = "plain"
BOLD = "bold"
ITALIC = "italic"
INLINE_MATH = "inline_math"

BLOCK_KINDS = frozenset({HEADING, PARAGRAPH, DISPLAY_MATH, TABLE, FIGURE_CAPTION})
SPAN_KINDS = frozenset({PLAIN, BOLD, ITALIC, INLINE_MATH})

# HTML attribute carrying LaTeX source on math elements (LaTeXML emits it).
MATH_ANNOTATION_ATTR = "alttext"

_CAPTION_PREFIX = "Figure: "
_HEADING_RE = re.compile(r"^(#{1,6}) (.*)$", re.S)


class MarkupError(ValueError):
    """Malformed markup or HTML; ``position`` is a byte offset when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (byte offset {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class InlineSpan:
    kind: str
    text: str

    def __post_init__(self):
        if self.kind not in SPAN_KINDS:
            raise ValueError(f"unknown span kind {self.kind!r}")


@dataclass(frozen=True)
class Block:
    """One block element.

    ``spans`` holds inline content for heading/paragraph/figure_caption;
    ``latex`` holds the raw body for display_math/table; ``level`` is only
    meaningful for headings.
    """

    kind: str
    spans: tuple[InlineSpan, ...] = ()
    latex: str = ""
    level: int = 0

    def __post_init__(self):
        if self.kind not in BLOCK_KINDS:
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind == HEADING and not 1 <= self.level <= 6:
            raise ValueError(f"heading level must be in [1, 6], got {self.level}")

    def text(self) -> str:
        """Raw text content, styling and delimiters dropped."""
        if self.kind in (DISPLAY_MATH, TABLE):
            return self.latex
        return "".join(span.text for span in self.spans)


@dataclass(frozen=True)
class MarkupDocument:
    blocks: tuple[Block, ...] = ()
    source_id: str = ""


def heading(level: int, content) -> Block:
    return Block(HEADING, spans=_as_spans(content), level=level)


def paragraph(content) -> Block:
    return Block(PARAGRAPH, spans=_as_spans(content))


def display_math(latex: str) -> Block:
    return Block(DISPLAY_MATH, latex=latex)


def table(latex: str) -> Block:
    return Block(TABLE, latex=latex)


def figure_caption(content) -> Block:
    return Block(FIGURE_CAPTION, spans=_as_spans(content))


def _as_spans(content) -> tuple[InlineSpan, ...]:
    if isinstance(content, str):
        return (InlineSpan(PLAIN, content),) if content else ()
    return merge_spans(content)


def merge_spans(spans) -> tuple[InlineSpan, ...]:
    """Drop empty spans and merge adjacent spans of the same kind."""
    merged: list[InlineSpan] = []
    for span in spans:
        if not span.text:
            continue
        if merged and merged[-1].kind == span.kind:
            merged[-1] = InlineSpan(span.kind, merged[-1].text + span.text)
        else:
            merged.append(span)
    return tuple(merged)


# ---------------------------------------------------------------------------
# Markdown serialization


def serialize_markdown(doc: MarkupDocument) -> str:
    """Deterministic Markdown-with-LaTeX rendering of a document."""
    parts = [_serialize_block(block) for block in doc.blocks]
    if not parts:
        return ""
    return "\n\n".join(parts) + "\n"


def _serialize_block(block: Block) -> str:
    if block.kind == HEADING:
        return "#" * block.level + " " + serialize_spans(block.spans)
    if block.kind == PARAGRAPH:
        return serialize_spans(block.spans)
    if block.kind == DISPLAY_MATH:
        return "\\[\n" + block.latex + "\n\\]"
    if block.kind == TABLE:
        return "\\begin{table}\n" + block.latex + "\n\\end{table}"
    if block.kind == FIGURE_CAPTION:
        return _CAPTION_PREFIX + serialize_spans(block.spans)
    raise AssertionError(block.kind)


def serialize_spans(spans) -> str:
    out = []
    for span in spans:
        if span.kind == PLAIN:
            out.append(span.text)
        elif span.kind == BOLD:
            out.append(f"**{span.text}**")
        elif span.kind == ITALIC:
            out.append(f"_{span.text}_")
        elif span.kind == INLINE_MATH:
            out.append(f"\\({span.text}\\)")
    return "".join(out)


# ---------------------------------------------------------------------------
# Markdown parsing


def parse_markdown(text: str, source_id: str = "") -> MarkupDocument:
    """Parse the canonical serialization grammar back into a document."""
    blocks: list[Block] = []
    for chunk in _split_chunks(text):
        blocks.extend(_parse_chunk(chunk))
    return MarkupDocument(blocks=tuple(blocks), source_id=source_id)


def _split_chunks(text: str) -> list[str]:
    """Split on blank lines, except inside display-math or table environments."""
    chunks: list[str] = []
    current: list[str] = []
    closer: str | None = None
    for line in text.split("\n"):
        if closer is not None:
            current.append(line)
            if line == closer:
                closer = None
            continue
        if not line.strip():
            if current:
                chunks.append("\n".join(current))
                current = []
            continue
        current.append(line)
        if line == "\\[":
            closer = "\\]"
        elif line == "\\begin{table}":
            closer = "\\end{table}"
    if closer is not None:
        raise MarkupError(f"unterminated {closer!r} environment")
    if current:
        chunks.append("\n".join(current))
    return chunks


def _parse_chunk(chunk: str) -> list[Block]:
    if chunk.startswith("\\["):
        body = chunk[len("\\[") : -len("\\]")].strip("\n")
        return [display_math(body)]
    if chunk.startswith("\\begin{table}"):
        body = chunk[len("\\begin{table}") : -len("\\end{table}")].strip("\n")
        return [table(body)]
    match = _HEADING_RE.match(chunk)
    if match:
        first, _, rest = match.group(2).partition("\n")
        blocks = [Block(HEADING, spans=parse_spans(first), level=len(match.group(1)))]
        if rest:
            blocks.append(Block(PARAGRAPH, spans=parse_spans(rest)))
        return blocks
    if chunk.startswith(_CAPTION_PREFIX):
        return [Block(FIGURE_CAPTION, spans=parse_spans(chunk[len(_CAPTION_PREFIX) :]))]
    return [Block(PARAGRAPH, spans=parse_spans(chunk))]


def parse_spans(text: str) -> tuple[InlineSpan, ...]:
    """Parse inline markup; unterminated bold/italic markers are literal text."""
    spans: list[InlineSpan] = []
    plain: list[str] = []

    def flush():
        if plain:
            spans.append(InlineSpan(PLAIN, "".join(plain)))
            plain.clear()

    i = 0
    n = len(text)
    while i < n:
        if text.startswith("\\(", i):
            end = text.find("\\)", i + 2)
            if end < 0:
                raise MarkupError("unbalanced \\( delimiter", position=i)
            flush()
            spans.append(InlineSpan(INLINE_MATH, text[i + 2 : end]))
            i = end + 2
        elif text[i] == "$":
            end = text.find("$", i + 1)
            if end < 0:
                plain.append(text[i])
                i += 1
            else:
                flush()
                spans.append(InlineSpan(INLINE_MATH, text[i + 1 : end]))
                i = end + 1
        elif text.startswith("**", i):
            end = text.find("**", i + 2)
            if end < 0:
                plain.append(text[i : i + 2])
                i += 2
            else:
                flush()
                spans.append(InlineSpan(BOLD, text[i + 2 : end]))
                i = end + 2
        elif text[i] == "_":
            end = text.find("_", i + 1)
            if end < 0:
                plain.append(text[i])
                i += 1
            else:
                flush()
                spans.append(InlineSpan(ITALIC, text[i + 1 : end]))
                i = end + 1
        else:
            plain.append(text[i])
            i += 1
    flush()
    return merge_spans(spans)


# ---------------------------------------------------------------------------
# Modality splitting


@dataclass(frozen=True)
class ModalitySlices:
    """Disjoint, jointly exhaustive text slices of a serialized document.

    ``delimiter_chars`` counts the delimiter syntax consumed, so that
    ``len(plain) + len(math) + len(tables) + delimiter_chars`` equals the
    input length.
    """

    plain: str
    math: str
    tables: str
    delimiter_chars: int = 0


_TABLE_OPEN = "\\begin{table}"
_TABLE_CLOSE = "\\end{table}"


def split_modalities(markup: str) -> ModalitySlices:
    """Slice serialized markup into plain text, math bodies, and table bodies.

    Only the canonical delimiters are recognized; a dangling opener or
    closer raises :class:`MarkupError` with its character position.
    """
    plain: list[str] = []
    math: list[str] = []
    tables: list[str] = []
    delims = 0
    i = 0
    n = len(markup)
    while i < n:
        if markup.startswith(_TABLE_OPEN, i):
            end = markup.find(_TABLE_CLOSE, i)
            if end < 0:
                raise MarkupError("unbalanced table environment", position=i)
            tables.append(markup[i + len(_TABLE_OPEN) : end])
            delims += len(_TABLE_OPEN) + len(_TABLE_CLOSE)
            i = end + len(_TABLE_CLOSE)
        elif markup.startswith("\\[", i):
            end = markup.find("\\]", i)
            if end < 0:
                raise MarkupError("unbalanced \\[ delimiter", position=i)
            math.append(markup[i + 2 : end])
            delims += 4
            i = end + 2
        elif markup.startswith("\\(", i):
            end = markup.find("\\)", i)
            if end < 0:
                raise MarkupError("unbalanced \\( delimiter", position=i)
            math.append(markup[i + 2 : end])
            delims += 4
            i = end + 2
        elif markup.startswith("\\)", i) or markup.startswith("\\]", i):
            raise MarkupError("dangling math closer", position=i)
        elif markup.startswith(_TABLE_CLOSE, i):
            raise MarkupError("dangling table closer", position=i)
        else:
            plain.append(markup[i])
            i += 1
    return ModalitySlices(
        plain="".join(plain),
        math="".join(math),
        tables="".join(tables),
        delimiter_chars=delims,
    )


# ---------------------------------------------------------------------------
# HTML subset parsing

_HEADING_TAGS = {f"h{n}": n for n in range(1, 7)}
_BOLD_TAGS = {"b", "strong"}
_ITALIC_TAGS = {"i", "em"}
_IGNORED_CONTENT_TAGS = {"script", "style"}
_WS_RE = re.compile(r"\s+")


def parse_html_subset(html: str, source_id: str = "") -> MarkupDocument:
    """Convert the supported LaTeXML-style HTML subset into a document.

    Supported elements: h1-h6, p, b/strong, i/em, math elements carrying a
    LaTeX ``alttext`` annotation (``display="block"`` selects display math),
    table, figcaption.  Unsupported elements contribute their text content
    as plain spans; all attributes other than the math annotation are
    dropped.  Structurally unrecoverable input (a supported block element
    left open at end of input) raises :class:`MarkupError` with the byte
    offset of the offending tag.
    """
    builder = _HtmlBuilder(html)
    try:
        builder.feed(html)
        builder.close()
    except AssertionError:  # pragma: no cover - HTMLParser internal failure
        raise MarkupError("unparseable HTML", position=None)
    builder.finish()
    return MarkupDocument(blocks=tuple(builder.blocks), source_id=source_id)


class _HtmlBuilder(HTMLParser):
    """Single-pass builder mapping the supported HTML subset onto blocks."""

    def __init__(self, source: str):
        super().__init__(convert_charrefs=True)
        self._lines = source.split("\n")
        self._line_starts = [0]
        for line in self._lines[:-1]:
            self._line_starts.append(self._line_starts[-1] + len(line.encode("utf-8")) + 1)
        self.blocks: list[Block] = []
        self._spans: list[InlineSpan] = []
        self._bold = 0
        self._italic = 0
        self._ignore = 0
        self._block_kind: str | None = None  # heading/paragraph/figure_caption
        self._heading_level = 0
        self._open_blocks: list[tuple[str, int]] = []  # (tag, byte offset)
        self._in_math = False
        self._math_pending: str | None = None
        self._math_display = False
        self._math_buffer: list[str] = []
        self._table: list[list[list[str]]] | None = None

    def _byte_offset(self) -> int:
        lineno, col = self.getpos()
        idx = min(lineno - 1, len(self._lines) - 1)
        return self._line_starts[idx] + len(self._lines[idx][:col].encode("utf-8"))

    # -- block plumbing

    def _flush_block(self):
        spans = merge_spans(self._spans)
        self._spans = []
        kind = self._block_kind or PARAGRAPH
        self._block_kind = None
        spans = _strip_edges(spans)
        if not spans:
            return
        if kind == HEADING:
            self.blocks.append(Block(HEADING, spans=spans, level=self._heading_level))
        else:
            self.blocks.append(Block(kind, spans=spans))

    def _append_text(self, text: str):
        if self._bold:
            kind = BOLD
        elif self._italic:
            kind = ITALIC
        else:
            kind = PLAIN
        self._spans.append(InlineSpan(kind, text))

    # -- HTMLParser hooks

    def handle_starttag(self, tag, attrs):
        if tag in _IGNORED_CONTENT_TAGS:
            self._ignore += 1
            return
        if self._ignore:
            return
        if tag == "math":
            attr_map = dict(attrs)
            self._in_math = True
            self._math_pending = attr_map.get(MATH_ANNOTATION_ATTR)
            self._math_display = attr_map.get("display") == "block"
            self._math_buffer = []
            self._open_blocks.append((tag, self._byte_offset()))
            return
        if self._table is not None:
            if tag == "tr":
                self._table.append([])
            elif tag in ("td", "th"):
                if not self._table:
                    self._table.append([])
                self._table[-1].append([])
            return
        if tag in _HEADING_TAGS:
            self._flush_block()
            self._block_kind = HEADING
            self._heading_level = _HEADING_TAGS[tag]
            self._open_blocks.append((tag, self._byte_offset()))
        elif tag == "p":
            self._flush_block()
            self._block_kind = PARAGRAPH
            self._open_blocks.append((tag, self._byte_offset()))
        elif tag == "figcaption":
            self._flush_block()
            self._block_kind = FIGURE_CAPTION
            self._open_blocks.append((tag, self._byte_offset()))
        elif tag in _BOLD_TAGS:
            self._bold += 1
        elif tag in _ITALIC_TAGS:
            self._italic += 1
        elif tag == "table":
            self._flush_block()
            self._table = []
            self._open_blocks.append((tag, self._byte_offset()))
        # any other element: pass through, text content flows into the
        # current block with the active styling

    def _end_math(self):
        # prefer the annotation; fall back to the element's text content
        latex = self._math_pending
        if latex is None:
            latex = _WS_RE.sub("", "".join(self._math_buffer))
        self._in_math = False
        self._math_pending = None
        self._math_buffer = []
        if not latex:
            return
        if self._table is not None:
            if self._table and self._table[-1]:
                self._table[-1][-1].append(latex)
        elif self._math_display:
            self._flush_block()
            self.blocks.append(Block(DISPLAY_MATH, latex=latex))
        else:
            self._spans.append(InlineSpan(INLINE_MATH, latex))

    def handle_endtag(self, tag):
        if tag in _IGNORED_CONTENT_TAGS:
            self._ignore = max(0, self._ignore - 1)
            return
        if self._ignore:
            return
        if tag == "math":
            if self._in_math:
                self._end_math()
            self._pop_open(tag)
            return
        if self._table is not None and tag != "table":
            return
        if tag in _HEADING_TAGS or tag == "p" or tag == "figcaption":
            self._flush_block()
            self._pop_open(tag)
        elif tag in _BOLD_TAGS:
            self._bold = max(0, self._bold - 1)
        elif tag in _ITALIC_TAGS:
            self._italic = max(0, self._italic - 1)
        elif tag == "table":
            self._emit_table()
            self._pop_open(tag)

    def _pop_open(self, tag):
        for idx in range(len(self._open_blocks) - 1, -1, -1):
            if self._open_blocks[idx][0] == tag:
                del self._open_blocks[idx]
                return

    def _emit_table(self):
        rows = self._table or []
        self._table = None
        lines = []
        for row in rows:
            cells = [_WS_RE.sub(" ", "".join(cell)).strip() for cell in row]
            lines.append(" & ".join(cells))
        body = " \\\\\n".join(line for line in lines if line)
        self.blocks.append(Block(TABLE, latex=body))

    def handle_data(self, data):
        if self._ignore:
            return
        if self._in_math:
            self._math_buffer.append(data)
            return
        if self._table is not None:
            if self._table and self._table[-1]:
                self._table[-1][-1].append(data)
            return
        text = _WS_RE.sub(" ", data)
        if text:
            self._append_text(text)

    def finish(self):
        self._flush_block()
        unclosed = [item for item in self._open_blocks]
        if unclosed:
            tag, offset = unclosed[0]
            raise MarkupError(f"unclosed <{tag}> element", position=offset)


def _strip_edges(spans: tuple[InlineSpan, ...]) -> tuple[InlineSpan, ...]:
    """Trim leading/trailing whitespace of a block's span run."""
    spans = list(spans)
    while spans and spans[0].kind == PLAIN and not spans[0].text.lstrip():
        spans.pop(0)
    while spans and spans[-1].kind == PLAIN and not spans[-1].text.rstrip():
        spans.pop()
    if spans and spans[0].kind == PLAIN:
        spans[0] = InlineSpan(PLAIN, spans[0].text.lstrip())
    if spans and spans[-1].kind == PLAIN:
        spans[-1] = InlineSpan(PLAIN, spans[-1].text.rstrip())
    return merge_spans(spans)
