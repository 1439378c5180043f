"""Delimiter stripping and per-language cleanup of raw doc comments."""

from __future__ import annotations

import ast
import re
import textwrap

from .model import SourceLang

KNOWN_XML_TAGS = ("summary", "param", "returns", "exception", "remarks", "value", "typeparam")

_HTML_WHITELIST = (
    "a", "b", "big", "blockquote", "br", "caption", "cite", "code", "dd", "div", "dl", "dt",
    "em", "font", "h1", "h2", "h3", "h4", "h5", "h6", "hr", "i", "img", "li", "ol", "p",
    "pre", "s", "small", "span", "strike", "strong", "sub", "sup", "table", "tbody", "td",
    "th", "thead", "tr", "tt", "u", "ul", "var",
)
# a "tag" holding Cyrillic is prose that happens to contain angle brackets
_HTML_KNOWN = re.compile(
    r"</?(?:%s)\b[^<>{}\u0400-\u04ff]*/?>" % "|".join(_HTML_WHITELIST), re.IGNORECASE
)
_HTML_FALLBACK = re.compile(r"</?[a-z][a-z0-9]*(?:\s[^<>{}\u0400-\u04ff]*)?/?>")
_BRACED = re.compile(r"\{[^{}\n]*\}")
_INLINE_TAG = re.compile(r"\{@(?:link|linkplain|code|literal)\s+([^{}]*?)\s*\}")
_SPACE_RUN = re.compile(r"[ \t]+")
_PY_LITERAL = re.compile(r"^[rRuUbBfF]{0,2}(\"\"\"|'''|\"|')", re.S)


def normalize(raw_comment: str, lang: SourceLang) -> str:
    """Return the comment text without delimiters and with whitespace canonicalized."""
    if lang is SourceLang.PYTHON:
        return _normalize_python(raw_comment)
    text = raw_comment.replace("\r\n", "\n")
    if lang is SourceLang.CSHARP:
        if text.lstrip().startswith("/*"):
            text = _strip_block(text)
        else:
            text = "\n".join(re.sub(r"^[ \t]*///? ?", "", line) for line in text.split("\n"))
        text = repair_xml(text)
    elif lang is SourceLang.GO:
        if text.lstrip().startswith("/*"):
            text = _strip_block(text)
        else:
            text = "\n".join(re.sub(r"^[ \t]*// ?", "", line) for line in text.split("\n"))
    else:
        if text.lstrip().startswith("/*"):
            text = _strip_block(text)
        text = _INLINE_TAG.sub(r"\1", text)
        text = _strip_html(text)
        text = _unwrap("\n".join(line.strip() for line in text.split("\n")))
    lines = [_SPACE_RUN.sub(" ", line).strip() for line in text.split("\n")]
    return _trim_blank_lines(lines)


def _trim_blank_lines(lines: list[str]) -> str:
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines)


def _strip_block(text: str) -> str:
    text = text.strip()
    text = re.sub(r"^/\*+", "", text)
    text = re.sub(r"\*+/$", "", text)
    return "\n".join(re.sub(r"^[ \t]*\*(?!/) ?", "", line) for line in text.split("\n"))


def _strip_html(text: str) -> str:
    """Drop HTML tags outside ``{...}`` spans (JSDoc types may contain ``<T>``)."""
    out, pos = [], 0
    for m in _BRACED.finditer(text):
        out.append(_HTML_FALLBACK.sub("", _HTML_KNOWN.sub("", text[pos:m.start()])))
        out.append(m.group())
        pos = m.end()
    out.append(_HTML_FALLBACK.sub("", _HTML_KNOWN.sub("", text[pos:])))
    return "".join(out)


def _unwrap(text: str) -> str:
    """Join hard-wrapped lines; keep breaks before tag lines and around blank lines."""
    out: list[str] = []
    for line in text.split("\n"):
        if not out or not line or not out[-1] or line.startswith("@"):
            out.append(line)
        else:
            out[-1] = out[-1] + " " + line
    return "\n".join(out)


def _normalize_python(raw: str) -> str:
    text = raw.replace("\r\n", "\n")
    if _PY_LITERAL.match(text.strip()):
        try:
            value = ast.literal_eval(text.strip())
        except (ValueError, SyntaxError):
            value = None
        if isinstance(value, str):
            text = value
    lines = []
    for line in _dedent_docstring(text).split("\n"):
        body = line.lstrip(" ")
        indent = line[: len(line) - len(body)]
        lines.append(indent + _SPACE_RUN.sub(" ", body).rstrip())
    return _trim_blank_lines(lines)


def _dedent_docstring(text: str) -> str:
    """Like inspect.cleandoc, but the summary line is the first nonblank one.

    cleandoc always exempts line 1 from the common indent, so a docstring that
    opens with a blank line dedents differently on a second pass; exempting
    the first nonblank line instead makes the result a fixed point.
    """
    lines = text.expandtabs().split("\n")
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        return ""
    return "\n".join([lines[0].strip()] + textwrap.dedent("\n".join(lines[1:])).split("\n"))


_XML_TAG = re.compile(r"<(/?)([A-Za-z][\w]*)([^<>]*?)(/?)>")


def repair_xml(text: str) -> str:
    """Lowercase known XmlDoc tags, close unclosed ones and drop orphan closers.

    Known tags do not nest: opening one while another is open closes the
    earlier one right after its last non-blank character.
    """
    out: list[str] = []
    open_name = None
    open_at = 0

    def close() -> None:
        tail = "".join(out[open_at:])
        body = tail.rstrip()
        out[open_at:] = [body, f"</{open_name}>", tail[len(body):]]

    pos = 0
    for m in _XML_TAG.finditer(text):
        closing, name, attrs, self_closing = m.groups()
        lower = name.lower()
        if lower not in KNOWN_XML_TAGS or (closing and self_closing):
            continue
        out.append(text[pos:m.start()])
        pos = m.end()
        if self_closing:
            out.append(f"<{lower}{attrs}/>")
        elif closing:
            if open_name == lower:
                out.append(f"</{lower}>")
                open_name = None
            # orphan or mismatched closer: dropped
        else:
            if open_name is not None:
                close()
            out.append(f"<{lower}{attrs}>")
            open_name = lower
            open_at = len(out)
    out.append(text[pos:])
    if open_name is not None:
        close()
    return "".join(out)
