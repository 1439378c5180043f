"""Literal/comment masking and bracket matching for the brace languages.

Masking keeps offsets and newlines intact: comments become spaces, string and
char literals keep their delimiters with the contents blanked.  Brackets that
only appear inside literals or comments can then no longer confuse matching.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from typing import Optional

from .model import SourceLang


class LexError(ValueError):
    def __init__(self, offset: int, detail: str):
        super().__init__(detail)
        self.offset = offset
        self.detail = detail


@dataclass(frozen=True)
class Comment:
    start: int
    end: int
    kind: str  # "line", "block", "doc" (/** */), "pre" (C# directive)


_STARTS = {
    SourceLang.JAVA: re.compile(r'//|/\*|"""|"|\''),
    SourceLang.CSHARP: re.compile(r'//|/\*|^[ \t]*#|\$?"""|\$@"|@\$"|@"|\$"|"|\'', re.M),
    SourceLang.JAVASCRIPT: re.compile(r'//|/\*|"|\'|`|/'),
    SourceLang.GO: re.compile(r'//|/\*|"|`|\''),
}

_QUOTED = {q: re.compile(r"(?:[^%s\\\n]|\\.)*(%s)?" % (q, q), re.S) for q in "\"'"}
_BLOCK_END = re.compile(r"\*/")
_VERBATIM = re.compile(r'(?:[^"]|"")*"', re.S)
_TRIPLE = re.compile(r'(?:[^"\\]|\\.|"(?!""))*"""', re.S)
_RAW_TRIPLE = re.compile(r'[\s\S]*?"""')

# JS: a slash starts a regex literal after these (otherwise it is division)
_REGEX_PREV_CHARS = set("(,=:[!&|?{};+-*%<>~^")
_REGEX_PREV_WORDS = {
    "return", "typeof", "case", "do", "else", "in", "of", "new", "delete",
    "void", "throw", "instanceof", "yield", "await",
}
_JS_REGEX = re.compile(r"(?:[^/\\\[\n]|\\.|\[(?:[^\]\\\n]|\\.)*\])+/[a-z]*")


def _blank(text: str) -> str:
    return re.sub(r"[^\n]", " ", text)


def _literal(text: str, open_len: int, close_len: int) -> str:
    """Keep delimiters, blank the inside."""
    if len(text) < open_len + close_len:
        return text[:open_len] + _blank(text[open_len:])
    inner = text[open_len: len(text) - close_len]
    return text[:open_len] + _blank(inner) + text[len(text) - close_len:]


def _prev_significant(pieces: list[str]) -> str:
    for piece in reversed(pieces):
        stripped = piece.rstrip()
        if stripped:
            return stripped
    return ""


def _scan_template(text: str, i: int) -> int:
    """Return the index just past the template literal opened at ``i``."""
    n = len(text)
    j = i + 1
    while j < n:
        c = text[j]
        if c == "\\":
            j += 2
        elif c == "`":
            return j + 1
        elif c == "$" and j + 1 < n and text[j + 1] == "{":
            j = _scan_js_hole(text, j + 2)
        else:
            j += 1
    return n


def _scan_js_hole(text: str, j: int) -> int:
    depth = 1
    n = len(text)
    while j < n:
        c = text[j]
        if c in "\"'":
            m = _QUOTED[c].match(text, j + 1)
            j = m.end()
        elif c == "`":
            j = _scan_template(text, j)
        elif c == "{":
            depth += 1
            j += 1
        elif c == "}":
            depth -= 1
            j += 1
            if depth == 0:
                return j
        else:
            j += 1
    return n


def _scan_cs_interpolated(text: str, j: int, verbatim: bool) -> int:
    """Index just past a C# interpolated string whose body starts at ``j``."""
    n = len(text)
    while j < n:
        c = text[j]
        if c == "\\" and not verbatim:
            j += 2
        elif c == '"':
            if verbatim and text.startswith('""', j):
                j += 2
                continue
            return j + 1
        elif c == "\n" and not verbatim:
            return j
        elif c == "{":
            if text.startswith("{{", j):
                j += 2
                continue
            depth = 1
            j += 1
            while j < n and depth:
                d = text[j]
                if d == '"':
                    m = _QUOTED['"'].match(text, j + 1)
                    j = m.end()
                    continue
                if d == "{":
                    depth += 1
                elif d == "}":
                    depth -= 1
                j += 1
        else:
            j += 1
    return n


def mask(text: str, lang: SourceLang) -> tuple[str, list[Comment]]:
    """Mask literals and comments; return the masked text and the comment spans."""
    start_re = _STARTS[lang]
    pieces: list[str] = []
    comments: list[Comment] = []
    pos = 0
    n = len(text)
    while pos < n:
        m = start_re.search(text, pos)
        if m is None:
            pieces.append(text[pos:])
            break
        s = m.start()
        tok = m.group()
        pieces.append(text[pos:s])
        if tok == "//":
            e = text.find("\n", s)
            e = n if e < 0 else e
            comments.append(Comment(s, e, "line"))
            pieces.append(_blank(text[s:e]))
        elif tok == "/*":
            mm = _BLOCK_END.search(text, s + 2)
            e = n if mm is None else mm.end()
            body = text[s:e]
            kind = "doc" if body.startswith("/**") and not body.startswith("/**/") else "block"
            comments.append(Comment(s, e, kind))
            pieces.append(_blank(body))
        elif tok.lstrip(" \t") == "#":
            # C# preprocessor directive; masked like a line comment
            s = m.end() - 1
            pieces.append(text[m.start():s])
            e = text.find("\n", s)
            e = n if e < 0 else e
            comments.append(Comment(s, e, "pre"))
            pieces.append(_blank(text[s:e]))
        elif tok in ('"""', '$"""'):
            pat = _RAW_TRIPLE if lang is SourceLang.CSHARP else _TRIPLE
            mm = pat.match(text, m.end())
            e = n if mm is None else mm.end()
            pieces.append(_literal(text[s:e], len(tok), 3 if mm else 0))
        elif tok in ('@"', '$@"', '@$"'):
            if tok == '@"':
                mm = _VERBATIM.match(text, m.end())
                e = n if mm is None else mm.end()
            else:
                e = _scan_cs_interpolated(text, m.end(), verbatim=True)
            pieces.append(_literal(text[s:e], len(tok), 1))
        elif tok == '$"':
            e = _scan_cs_interpolated(text, m.end(), verbatim=False)
            pieces.append(_literal(text[s:e], 2, 1 if text[e - 1:e] == '"' else 0))
        elif tok == "`" and lang is SourceLang.GO:
            e = text.find("`", s + 1)
            e = n if e < 0 else e + 1
            pieces.append(_literal(text[s:e], 1, 1))
        elif tok == "`":
            e = _scan_template(text, s)
            pieces.append(_literal(text[s:e], 1, 1))
        elif tok in ('"', "'"):
            mm = _QUOTED[tok].match(text, s + 1)
            e = mm.end()
            pieces.append(_literal(text[s:e], 1, 1 if mm.group(1) else 0))
        elif tok == "/":
            prev = _prev_significant(pieces)
            word = re.search(r"[\w$]+$", prev)
            is_regex = not prev or prev[-1] in _REGEX_PREV_CHARS or (
                word is not None and word.group() in _REGEX_PREV_WORDS
            )
            mm = _JS_REGEX.match(text, s + 1) if is_regex else None
            if mm is None:
                pieces.append("/")
                e = s + 1
            else:
                e = mm.end()
                pieces.append("/" + _blank(text[s + 1:e - 1]) + "/")
        else:  # pragma: no cover - the start regexes only produce the tokens above
            raise AssertionError(tok)
        pos = e
    masked = "".join(pieces)
    assert len(masked) == n
    return masked, comments


_OPEN = {"(": ")", "[": "]", "{": "}"}
_BRACKETS = re.compile(r"[()\[\]{}]")


def match_brackets(masked: str) -> dict[int, int]:
    """Map every opening bracket offset to its closing offset.

    Raises LexError on the first unbalanced bracket.
    """
    pairs: dict[int, int] = {}
    stack: list[int] = []
    for m in _BRACKETS.finditer(masked):
        c = m.group()
        i = m.start()
        if c in _OPEN:
            stack.append(i)
            continue
        if not stack:
            raise LexError(i, f"unmatched {c!r}")
        top = stack.pop()
        if _OPEN[masked[top]] != c:
            raise LexError(i, f"{masked[top]!r} closed by {c!r}")
        pairs[top] = i
    if stack:
        raise LexError(stack[-1], f"unclosed {masked[stack[-1]]!r}")
    return pairs


class LineIndex:
    def __init__(self, text: str):
        self._starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def line(self, offset: int) -> int:
        """1-based line of ``offset``."""
        return bisect.bisect_right(self._starts, offset)

    def line_start(self, line: int) -> int:
        return self._starts[line - 1]


class CommentIndex:
    def __init__(self, comments: list[Comment]):
        self.comments = comments
        self._ends = [c.end for c in comments]

    def last_before(self, offset: int) -> Optional[int]:
        """Index of the last comment ending at or before ``offset``."""
        k = bisect.bisect_right(self._ends, offset) - 1
        return k if k >= 0 else None
