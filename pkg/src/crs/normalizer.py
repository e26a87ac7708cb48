"""Text normalization: lowercasing, obfuscation folding, code stripping.

Produces a folded form that rule scanning and feature extraction run on,
together with an exact map from every folded character back to a byte
span of the original text so matches can be highlighted in place.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InputTooLarge, InvalidEncoding

MAX_BODY_BYTES = 65536

#: leet-style substitutions applied after lowercasing; overridable via TSV
DEFAULT_SUBSTITUTIONS = {
    "$": "s",
    "@": "a",
    "0": "o",
    "1": "i",
    "3": "e",
    "!": "i",
    "+": "t",
}

#: runs of one repeated character longer than this collapse to two
RUN_LIMIT = 3

_WORD_RE = re.compile(r"\w+(?:'\w+)*")
_FENCE = "```"


def load_substitutions(path) -> dict[str, str]:
    """Read a `from<TAB>to` substitution table; `#` lines are comments."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            src, _, dst = line.partition("\t")
            table[src] = dst
    return table


@dataclass(frozen=True)
class Token:
    surface: str
    start: int  # byte offset into original
    end: int
    cstart: int  # char offset into original
    cend: int
    is_word: bool


@dataclass(frozen=True)
class NormalizeOptions:
    strip_code: bool = True
    substitutions: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_SUBSTITUTIONS))
    max_bytes: int = MAX_BODY_BYTES


@dataclass(frozen=True)
class NormalizedText:
    original: str
    folded: str
    #: offset_map[i] = (byte_start, byte_end) of the original text that
    #: produced folded character i; spans are disjoint and increasing
    offset_map: tuple[tuple[int, int], ...]
    tokens: tuple[Token, ...]
    #: word-token surfaces of the folded form (scoring / tf-idf input)
    folded_tokens: tuple[Token, ...]

    def original_span(self, fstart: int, fend: int) -> tuple[int, int]:
        """Map a folded char span [fstart, fend) to an original byte span."""
        if fstart >= fend:
            raise ValueError("empty folded span")
        return self.offset_map[fstart][0], self.offset_map[fend - 1][1]

    def original_slice(self, byte_start: int, byte_end: int) -> str:
        return self.original.encode("utf-8")[byte_start:byte_end].decode("utf-8")

    def word_tokens(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]

    def folded_words(self) -> list[str]:
        return [t.surface for t in self.folded_tokens if t.is_word]


def _code_spans(text: str) -> list[tuple[int, int]]:
    """Char spans of paired code segments, fences first then inline ticks.

    Backtick runs of length >= 3 are fence delimiters, shorter runs are
    inline delimiters; delimiters of each kind pair up left to right and
    an unpaired trailing delimiter is left verbatim.
    """
    runs = [(m.start(), m.end()) for m in re.finditer(r"`+", text)]
    fences = [r for r in runs if r[1] - r[0] >= 3]
    spans = [(a[0], b[1]) for a, b in zip(fences[0::2], fences[1::2])]

    def inside(run):
        return any(a <= run[0] < b for a, b in spans)

    ticks = [r for r in runs if r[1] - r[0] < 3 and not inside(r)]
    spans += [(a[0], b[1]) for a, b in zip(ticks[0::2], ticks[1::2])]
    spans.sort()
    merged: list[tuple[int, int]] = []
    for span in spans:  # an inline pair may straddle a fence pair
        if merged and span[0] < merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], span[1]))
        else:
            merged.append(span)
    return merged


def strip_code(body: str) -> str:
    """Replace paired fenced and inline code segments with one space each."""
    spans = _code_spans(body)
    if not spans:
        return body
    out = []
    pos = 0
    for a, b in spans:
        out.append(body[pos:a])
        out.append(" ")
        pos = b
    out.append(body[pos:])
    return "".join(out)


def _tokenize(text: str, byte_of: list[int]) -> tuple[Token, ...]:
    tokens = []
    pos = 0
    for m in _WORD_RE.finditer(text):
        for sym in re.finditer(r"\S", text[pos:m.start()]):
            s = pos + sym.start()
            tokens.append(Token(text[s], byte_of[s], byte_of[s + 1], s, s + 1, False))
        tokens.append(Token(m.group(), byte_of[m.start()], byte_of[m.end()],
                            m.start(), m.end(), True))
        pos = m.end()
    for sym in re.finditer(r"\S", text[pos:]):
        s = pos + sym.start()
        tokens.append(Token(text[s], byte_of[s], byte_of[s + 1], s, s + 1, False))
    return tuple(tokens)


def _byte_offsets(text: str) -> list[int]:
    """byte_of[i] = byte offset of char i; has len(text)+1 entries."""
    offs = [0]
    total = 0
    for ch in text:
        total += len(ch.encode("utf-8"))
        offs.append(total)
    return offs


def normalize(body, opts: NormalizeOptions | None = None) -> NormalizedText:
    """Fold a raw comment body for rule scanning.

    Folding lowercases, applies the obfuscation substitution table,
    collapses character runs longer than RUN_LIMIT to two, and (by
    default) blanks paired code segments. Every folded character keeps
    an exact byte span into the original.
    """
    opts = opts or NormalizeOptions()
    if isinstance(body, bytes):
        try:
            body = body.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(str(exc)) from exc
    byte_of = _byte_offsets(body)
    if byte_of[-1] > opts.max_bytes:
        raise InputTooLarge(f"body is {byte_of[-1]} bytes (limit {opts.max_bytes})")

    code = _code_spans(body) if opts.strip_code else []
    code_start = {a: b for a, b in code}

    # (folded char, orig char start, orig char end), pre run-collapse
    cells: list[tuple[str, int, int]] = []
    i = 0
    n = len(body)
    while i < n:
        if i in code_start:
            end = code_start[i]
            cells.append((" ", i, end))
            i = end
            continue
        ch = body[i].lower()
        if len(ch) != 1:  # rare one-to-many lowercase expansions
            ch = ch[0]
        ch = opts.substitutions.get(ch, ch)
        cells.append((ch, i, i + 1))
        i += 1

    # collapse runs > RUN_LIMIT to two cells; the second kept cell
    # absorbs the dropped originals so spans stay complete
    collapsed: list[tuple[str, int, int]] = []
    j = 0
    while j < len(cells):
        ch = cells[j][0]
        k = j
        while k < len(cells) and cells[k][0] == ch:
            k += 1
        run = cells[j:k]
        if len(run) > RUN_LIMIT:
            collapsed.append(run[0])
            collapsed.append((ch, run[1][1], run[-1][2]))
        else:
            collapsed.extend(run)
        j = k

    folded = "".join(c[0] for c in collapsed)
    offset_map = tuple((byte_of[a], byte_of[b]) for _, a, b in collapsed)

    tokens = _tokenize(body, byte_of)
    # folded tokens carry char offsets into folded via cstart/cend;
    # byte fields hold the mapped original span
    folded_tokens = []
    for m in _WORD_RE.finditer(folded):
        folded_tokens.append(Token(
            m.group(),
            offset_map[m.start()][0] if m.start() < m.end() else 0,
            offset_map[m.end() - 1][1],
            m.start(), m.end(), True))

    return NormalizedText(body, folded, offset_map, tokens, tuple(folded_tokens))
