"""Scanners and token-stream filtering.

Three tokenizers are available: a lexical C-family scanner (good enough for
Java/C#-like syntax), a generic whitespace-word scanner and a line scanner.
Scanning keeps comments as tagged tokens; ``filter_tokens`` drops them
together with regions delimited by user-supplied exclusion patterns.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .config import PipelineConfig

KIND_IDENTIFIER = "identifier"
KIND_KEYWORD = "keyword"
KIND_OPERATOR = "operator"
KIND_LITERAL = "literal"
KIND_PUNCTUATION = "punctuation"
KIND_COMMENT = "comment"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    file: str
    line: int
    column: int

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError("token position must be 1-based")
        if not self.text:
            raise ValueError("token text must be non-empty")


class ScanError(Exception):
    """File-level scanning failure (e.g. undecodable bytes)."""

    def __init__(self, file: str, message: str):
        super().__init__(f"{file}: {message}")
        self.file = file


# Keyword set covering the usual C/C++/Java/C# lexical ground. Unknown words
# scan as identifiers, which is all the downstream normalization needs.
C_FAMILY_KEYWORDS = frozenset(
    """
    abstract as base bool break byte case catch char checked class const
    continue decimal default delegate do double else enum event explicit
    extends extern false final finally fixed float for foreach goto if
    implements implicit import in instanceof int interface internal is lock
    long namespace native new null object operator out override package
    params private protected public readonly ref return sbyte sealed short
    signed sizeof stackalloc static strictfp string struct super switch
    synchronized this throw throws transient true try typedef typeof uint
    ulong unchecked unsafe unsigned ushort using var virtual void volatile
    while
    """.split()
)

_C_TOKEN_RE = re.compile(
    r"""
    (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<string>"(?:\\.|[^"\\\n])*"|'(?:\\.|[^'\\\n])*')
  | (?P<number>(?:0[xX][0-9a-fA-F]+|\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)[uUlLfFdDmM]*)
  | (?P<word>[A-Za-z_@$][A-Za-z0-9_$]*)
  | (?P<operator><<=|>>=|==|!=|<=|>=|&&|\|\||\+\+|--|\+=|-=|\*=|/=|%=|&=|\|=|\^=|<<|>>|->|=>|::|\?\?|[-+*/%=<>!&|^~?.])
  | (?P<punct>[{}()\[\];,:])
  | (?P<ws>\s+)
  | (?P<other>.)
    """,
    re.VERBOSE | re.DOTALL,
)


def _line_col(text: str, offset: int, line_starts: list[int]) -> tuple[int, int]:
    # line_starts is the sorted list of offsets at which each line begins
    import bisect

    idx = bisect.bisect_right(line_starts, offset) - 1
    return idx + 1, offset - line_starts[idx] + 1


def _scan_c_family(content: str, file: str) -> list[Token]:
    line_starts = [0]
    for i, ch in enumerate(content):
        if ch == "\n":
            line_starts.append(i + 1)
    tokens: list[Token] = []
    for match in _C_TOKEN_RE.finditer(content):
        group = match.lastgroup
        if group == "ws":
            continue
        line, col = _line_col(content, match.start(), line_starts)
        text = match.group()
        if group == "comment":
            kind = KIND_COMMENT
        elif group in ("string", "number"):
            kind = KIND_LITERAL
        elif group == "word":
            kind = KIND_KEYWORD if text in C_FAMILY_KEYWORDS else KIND_IDENTIFIER
        elif group == "punct":
            kind = KIND_PUNCTUATION
        elif group == "operator":
            kind = KIND_OPERATOR
        else:
            kind = KIND_OPERATOR  # stray byte; keep reconstruction property
        tokens.append(Token(kind, text, file, line, col))
    return tokens


def _scan_words(content: str, file: str) -> list[Token]:
    tokens = []
    for lineno, line in enumerate(content.splitlines(), start=1):
        col = 1
        for part in re.finditer(r"\S+", line):
            tokens.append(Token(KIND_IDENTIFIER, part.group(), file, lineno, part.start() + 1))
            col = part.end() + 1
    return tokens


def _scan_lines(content: str, file: str) -> list[Token]:
    tokens = []
    for lineno, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if stripped:
            tokens.append(Token(KIND_IDENTIFIER, stripped, file, lineno, line.index(stripped[0]) + 1))
    return tokens


def scan(content: str, config: PipelineConfig, file: str = "<memory>") -> list[Token]:
    """Tokenize *content* according to the configured language mode."""
    if config.language == "c-family":
        return _scan_c_family(content, file)
    if config.language == "generic-words":
        return _scan_words(content, file)
    if config.language == "generic-lines":
        return _scan_lines(content, file)
    raise ValueError(f"unknown language {config.language!r}")


def _compile_patterns(patterns: Iterable[str]) -> list[re.Pattern]:
    return [re.compile(p) for p in patterns]


def filter_tokens(
    tokens: list[Token],
    config: PipelineConfig,
    warnings: list[str] | None = None,
) -> list[Token]:
    """Drop comment tokens and regions between BEGIN/END exclusion patterns.

    Exclusion patterns are line-anchored regexes given in pairs: the first
    match opens an excluded region, the next one closes it. An unterminated
    region extends to the end of the file (with a warning).
    """
    patterns = _compile_patterns(config.exclusion_patterns)
    out: list[Token] = []
    excluding = False
    for tok in tokens:
        hit = any(p.search(tok.text) for p in patterns)
        if hit:
            excluding = not excluding
            continue
        if excluding or tok.kind == KIND_COMMENT:
            continue
        out.append(tok)
    if excluding and warnings is not None:
        warnings.append("unterminated exclusion region extends to end of file")
    return out


def file_excluded(path: str, config: PipelineConfig) -> bool:
    """Whole-file exclusion: any exclusion pattern matching the path."""
    return any(re.search(p, path) for p in config.exclusion_patterns)
