"""Normalized statements (units) and corpus assembly.

Tokens are grouped into statements, identifiers and literals are replaced
by placeholders, and equal normalized statements are interned to equal
integer symbols.  Unit symbols are non-negative; sentinel symbols are
negative and globally unique, so no match can ever cross one.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .config import PipelineConfig
from .tokens import (
    KIND_IDENTIFIER,
    KIND_KEYWORD,
    KIND_LITERAL,
    KIND_OPERATOR,
    KIND_PUNCTUATION,
    ScanError,
    Token,
    filter_tokens,
    scan,
)

PLACEHOLDER_IDENTIFIER = "<id>"
PLACEHOLDER_STRING = "<str>"
PLACEHOLDER_NUMBER = "<num>"


@dataclass(frozen=True)
class Unit:
    symbol: int
    file: str
    first_line: int
    last_line: int
    token_span: tuple[int, int]  # [start, end) into the file's filtered token list

    def __post_init__(self):
        if self.first_line > self.last_line:
            raise ValueError("unit line range inverted")


class SymbolTable:
    """Interns normalized statement renderings to dense integer symbols."""

    def __init__(self):
        self._by_text: dict[tuple[str, ...], int] = {}
        self._texts: list[tuple[str, ...]] = []

    def intern(self, normalized: tuple[str, ...]) -> int:
        sym = self._by_text.get(normalized)
        if sym is None:
            sym = len(self._texts)
            self._by_text[normalized] = sym
            self._texts.append(normalized)
        return sym

    def text(self, symbol: int) -> tuple[str, ...]:
        return self._texts[symbol]

    def __len__(self) -> int:
        return len(self._texts)


def _normalize_token(tok: Token, config: PipelineConfig) -> str:
    if tok.kind == KIND_IDENTIFIER and config.normalize_identifiers:
        return PLACEHOLDER_IDENTIFIER
    if tok.kind == KIND_LITERAL and config.normalize_literals:
        # Distinct placeholders per literal kind keep e.g. string tables and
        # numeric tables from matching each other.
        if tok.text[:1] in "\"'":
            return PLACEHOLDER_STRING
        return PLACEHOLDER_NUMBER
    return tok.text


def _segment_c_family(tokens: list[Token]) -> tuple[list[tuple[int, int]], list[int]]:
    """Split a filtered token list into statement spans.

    Statements end at ';' (kept) and at '{' / '}' (the braces are discarded
    from the units).  Returns the statement spans and the unit indices after
    which a method boundary falls (lexical: a '{' directly preceded by ')'
    at top level opens a method body).
    """
    spans: list[tuple[int, int]] = []
    method_ends: list[int] = []
    start = 0
    depth = 0
    method_depth: int | None = None
    for i, tok in enumerate(tokens):
        if tok.kind != KIND_PUNCTUATION or tok.text not in ";{}":
            continue
        if tok.text == ";":
            spans.append((start, i + 1))
            start = i + 1
            continue
        # brace: close the pending statement without the brace itself
        if i > start:
            spans.append((start, i))
        start = i + 1
        if tok.text == "{":
            if method_depth is None and i > 0 and tokens[i - 1].text == ")":
                method_depth = depth
            depth += 1
        else:
            depth -= 1
            if method_depth is not None and depth == method_depth:
                method_depth = None
                method_ends.append(len(spans))
    if start < len(tokens):
        spans.append((start, len(tokens)))
    return spans, method_ends


def normalize(
    tokens: list[Token],
    config: PipelineConfig,
    table: SymbolTable,
) -> tuple[list[Unit], list[int]]:
    """Group filtered tokens into units; returns (units, method boundary indices)."""
    if not tokens:
        return [], []
    if config.language == "c-family":
        spans, method_ends = _segment_c_family(tokens)
    else:
        spans = [(i, i + 1) for i in range(len(tokens))]
        method_ends = []
    units: list[Unit] = []
    for span_start, span_end in spans:
        if span_start >= span_end:
            continue
        group = tokens[span_start:span_end]
        normalized = tuple(_normalize_token(t, config) for t in group)
        units.append(
            Unit(
                symbol=table.intern(normalized),
                file=group[0].file,
                first_line=group[0].line,
                last_line=group[-1].line,
                token_span=(span_start, span_end),
            )
        )
    # method_ends count statement spans, some of which may have been empty
    kept = [i for i, (a, b) in enumerate(spans) if a < b]
    remap = {}
    for new_idx, old_idx in enumerate(kept):
        remap[old_idx] = new_idx + 1  # boundary after unit new_idx
    boundaries = []
    for end in method_ends:
        # boundary after the last kept span strictly before `end`
        prior = [remap[i] for i in remap if i < end]
        boundaries.append(max(prior) if prior else 0)
    return units, sorted(set(boundaries))


@dataclass
class UnitSequence:
    """The concatenated corpus: unit symbols plus negative sentinel symbols.

    ``symbols[i]`` is either a non-negative unit symbol or a unique negative
    sentinel; ``units[i]`` is the corresponding Unit or None for sentinels.
    """

    symbols: list[int] = field(default_factory=list)
    units: list[object] = field(default_factory=list)
    table: SymbolTable = field(default_factory=SymbolTable)
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    _next_sentinel: int = -1

    def append_unit(self, unit: Unit) -> None:
        self.symbols.append(unit.symbol)
        self.units.append(unit)

    def append_sentinel(self) -> None:
        self.symbols.append(self._next_sentinel)
        self.units.append(None)
        self._next_sentinel -= 1

    def fresh_sentinel(self) -> int:
        sym = self._next_sentinel
        self._next_sentinel -= 1
        return sym

    def is_sentinel(self, position: int) -> bool:
        return self.symbols[position] < 0

    def unit_at(self, position: int) -> Unit:
        unit = self.units[position]
        if unit is None:
            raise IndexError(f"position {position} is a sentinel")
        return unit

    def __len__(self) -> int:
        return len(self.symbols)


def build_corpus(files: list[tuple[str, str]], config: PipelineConfig) -> UnitSequence:
    """Run scan → filter → normalize per file and concatenate with sentinels.

    A fresh sentinel follows each file; in boundary_mode='method' another
    fresh sentinel follows each top-level method/section body.  Per-file
    scan errors are collected and the corpus is built from the rest.
    """
    seq = UnitSequence()
    for file_id, content in files:
        try:
            tokens = scan(content, config, file=file_id)
        except ScanError as exc:
            seq.errors.append(str(exc))
            continue
        filtered = filter_tokens(tokens, config, warnings=seq.warnings)
        units, method_boundaries = normalize(filtered, config, seq.table)
        boundary_set = set(method_boundaries) if config.boundary_mode == "method" else set()
        for idx, unit in enumerate(units):
            seq.append_unit(unit)
            if idx + 1 in boundary_set and idx + 1 < len(units):
                seq.append_sentinel()
        seq.append_sentinel()
    return seq


def read_files(paths: list[str], encoding: str = "utf-8") -> tuple[list[tuple[str, str]], list[str]]:
    """Read source files as text; undecodable or unreadable files are skipped."""
    out: list[tuple[str, str]] = []
    errors: list[str] = []
    for path in paths:
        try:
            with open(path, encoding=encoding) as handle:
                out.append((path, handle.read()))
        except (OSError, UnicodeDecodeError) as exc:
            errors.append(f"{path}: {exc}")
    return out, errors
