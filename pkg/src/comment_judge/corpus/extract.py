"""Comment extraction from C source text.

The scanner makes a single forward pass and never reads a byte twice
(a one-slot pushback buffer re-serves already-read characters). It tracks
string and character literals so comment markers inside them are ignored,
and records every comment verbatim with its position.

This is a lexical heuristic, not a C parser: no preprocessor, no line
splicing, and string literals are defensively terminated at end of line so
one stray quote cannot swallow the rest of the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .model import CodeCommentPair, Source


@dataclass(frozen=True)
class CommentToken:
    kind: str            # "block" or "line"
    raw: str             # exact source text, delimiters included
    start_line: int
    end_line: int
    start_offset: int
    trailing: bool       # code precedes the comment on its first line


@dataclass(frozen=True)
class ScanIssue:
    line: int
    message: str


@dataclass(frozen=True)
class ScanResult:
    comments: tuple[CommentToken, ...]
    code_lines: tuple[str, ...]  # per physical line, comment text removed
    issues: tuple[ScanIssue, ...]


@dataclass(frozen=True)
class ExtractionResult:
    """Extracted pairs plus any scan problems (which do not void prior pairs)."""

    pairs: tuple[CodeCommentPair, ...]
    issues: tuple[ScanIssue, ...]


_CODE, _STRING, _CHAR, _BLOCK, _LINE = "code", "string", "char", "block", "line"


def scan_source(chars: Iterable[str]) -> ScanResult:
    """Single-pass scan separating comments from code.

    ``chars`` may be any character iterable; each character is pulled from
    it exactly once.
    """
    it = iter(chars)
    pushed: list[tuple[str, int]] = []
    consumed = 0

    def read() -> tuple[Optional[str], int]:
        nonlocal consumed
        if pushed:
            return pushed.pop()
        ch = next(it, None)
        if ch is None:
            return None, consumed
        pos = consumed
        consumed += 1
        return ch, pos

    comments: list[CommentToken] = []
    code_lines: list[str] = []
    issues: list[ScanIssue] = []

    state = _CODE
    line = 1
    code_buf: list[str] = []
    raw: list[str] = []
    start_line = 0
    start_offset = 0
    trailing = False
    escaped = False

    def flush_line() -> None:
        nonlocal line
        code_lines.append("".join(code_buf))
        code_buf.clear()
        line += 1

    def emit(kind: str) -> None:
        comments.append(CommentToken(
            kind=kind,
            raw="".join(raw),
            start_line=start_line,
            end_line=line,
            start_offset=start_offset,
            trailing=trailing,
        ))
        raw.clear()

    while True:
        ch, pos = read()
        if ch is None:
            break

        if state == _CODE:
            if ch == "/":
                nxt, npos = read()
                if nxt in ("*", "/"):
                    start_line = line
                    start_offset = pos
                    trailing = bool("".join(code_buf).strip())
                    raw.extend(("/", nxt))
                    state = _BLOCK if nxt == "*" else _LINE
                else:
                    code_buf.append("/")
                    if nxt is not None:
                        pushed.append((nxt, npos))
            elif ch == '"':
                code_buf.append(ch)
                state = _STRING
                escaped = False
            elif ch == "'":
                code_buf.append(ch)
                state = _CHAR
                escaped = False
            elif ch == "\n":
                flush_line()
            else:
                code_buf.append(ch)

        elif state in (_STRING, _CHAR):
            if ch == "\n":
                # Unterminated literal: close it at end of line.
                state = _CODE
                flush_line()
            else:
                code_buf.append(ch)
                if escaped:
                    escaped = False
                elif ch == "\\":
                    escaped = True
                elif ch == ('"' if state == _STRING else "'"):
                    state = _CODE

        elif state == _LINE:
            if ch == "\n":
                emit("line")
                state = _CODE
                flush_line()
            else:
                raw.append(ch)

        else:  # _BLOCK
            if ch == "*":
                nxt, npos = read()
                if nxt == "/":
                    raw.extend(("*", "/"))
                    emit("block")
                    state = _CODE
                else:
                    raw.append("*")
                    if nxt is not None:
                        pushed.append((nxt, npos))
            elif ch == "\n":
                raw.append(ch)
                flush_line()
            else:
                raw.append(ch)

    if state == _LINE:
        emit("line")
    elif state == _BLOCK:
        issues.append(ScanIssue(
            line=start_line,
            message=f"unterminated block comment starting at line {start_line}",
        ))
    if code_buf:
        code_lines.append("".join(code_buf))

    return ScanResult(tuple(comments), tuple(code_lines), tuple(issues))


def _clean_block(raw: str) -> str:
    lines = []
    for part in raw[2:-2].split("\n"):
        text = part.strip().lstrip("*").strip()
        if text:
            lines.append(text)
    return "\n".join(lines)


def _clean_line_group(raws: list[str]) -> str:
    lines = []
    for raw in raws:
        text = raw[2:].lstrip("/").strip()
        if text:
            lines.append(text)
    return "\n".join(lines)


def _group_comments(comments: tuple[CommentToken, ...]) -> list[list[CommentToken]]:
    """Block comments and trailing line comments stand alone; standalone
    ``//`` comments on consecutive lines form one group."""
    groups: list[list[CommentToken]] = []
    for token in comments:
        previous = groups[-1][-1] if groups else None
        if (
            token.kind == "line"
            and not token.trailing
            and previous is not None
            and previous.kind == "line"
            and not previous.trailing
            and token.start_line == previous.end_line + 1
        ):
            groups[-1].append(token)
        else:
            groups.append([token])
    return groups


def extract_pairs_from_c_source(
    text: str,
    context_lines: int,
    id_prefix: str = "pair-",
) -> ExtractionResult:
    """One unlabeled pair per comment group found in C source.

    The pair's code context is the next ``context_lines`` non-comment,
    non-blank lines after the comment, or the same line's code when the
    comment trails a statement. A comment starting at byte offset 0 is
    treated as a file header and skipped. Comments inside string literals
    are never extracted.
    """
    if context_lines < 1:
        raise ValueError("context_lines must be >= 1")

    scan = scan_source(iter(text))
    pairs: list[CodeCommentPair] = []

    for group in _group_comments(scan.comments):
        first = group[0]
        if first.start_offset == 0:
            continue  # file header, not code documentation
        if first.kind == "block":
            comment_text = _clean_block(first.raw)
        else:
            comment_text = _clean_line_group([t.raw for t in group])
        if not comment_text:
            continue

        if len(group) == 1 and first.trailing:
            line_idx = first.start_line - 1
            code = scan.code_lines[line_idx].strip() if line_idx < len(scan.code_lines) else ""
        else:
            # Start on the comment's own closing line: any code there sits
            # after the comment (nothing precedes a non-trailing one).
            collected: list[str] = []
            for idx in range(group[-1].end_line - 1, len(scan.code_lines)):
                candidate = scan.code_lines[idx]
                if candidate.strip():
                    collected.append(candidate.rstrip())
                    if len(collected) == context_lines:
                        break
            code = "\n".join(collected)

        pairs.append(CodeCommentPair(
            id=f"{id_prefix}{len(pairs)}",
            comment_text=comment_text,
            code_context=code,
            label=None,
            source=Source.EXTRACTED,
        ))

    return ExtractionResult(tuple(pairs), scan.issues)
