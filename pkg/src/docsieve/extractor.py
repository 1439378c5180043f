"""Function extraction: signature facts, body text and the attached doc comment.

Python goes through the stdlib ``ast``.  Java, C#, Go and JavaScript use a
light scanner: literals and comments are masked, brackets matched, and
declarations recognised from the tokens around each ``name(`` site.
"""

from __future__ import annotations

import ast
import bisect
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from ._lexer import Comment, CommentIndex, LexError, LineIndex, mask, match_brackets
from .model import FunctionUnit, ParamFact, Provenance, SignatureInfo, SourceLang

log = logging.getLogger(__name__)

DEFAULT_EXTENSIONS = {
    ".py": SourceLang.PYTHON,
    ".java": SourceLang.JAVA,
    ".go": SourceLang.GO,
    ".cs": SourceLang.CSHARP,
    ".js": SourceLang.JAVASCRIPT,
    ".mjs": SourceLang.JAVASCRIPT,
}


class ExtractionError(Exception):
    """EXTRACTION_FAILED: the file is skipped, the run continues."""

    def __init__(self, path: str, line: int, detail: str):
        super().__init__(f"{path}:{line}: {detail}")
        self.path = path
        self.line = line
        self.detail = detail


@dataclass(frozen=True)
class SourceFile:
    lang: SourceLang
    repo_id: str
    path: str
    text: str


def lang_for_path(path: str, extensions: Optional[dict[str, SourceLang]] = None) -> Optional[SourceLang]:
    ext_map = DEFAULT_EXTENSIONS if extensions is None else extensions
    dot = path.rfind(".")
    if dot < 0:
        return None
    return ext_map.get(path[dot:].lower())


def extract_units(file: SourceFile) -> list[FunctionUnit]:
    """Extract every named function/method of ``file``, ordered by line."""
    if file.lang is SourceLang.PYTHON:
        units = _extract_python(file)
    else:
        try:
            masked, comments = mask(file.text, file.lang)
            pairs = match_brackets(masked)
        except LexError as exc:
            raise ExtractionError(file.path, LineIndex(file.text).line(exc.offset), exc.detail) from None
        scanner = _SCANNERS[file.lang](file, masked, comments, pairs)
        units = scanner.run()
    units.sort(key=lambda u: u.provenance.line)
    return units


# --------------------------------------------------------------------------
# Python


def _dedup(items: Iterable[str]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(items))


def _is_type_name(dotted: str) -> bool:
    last = dotted.rsplit(".", 1)[-1]
    return bool(last) and last[0].isupper()


def _own_nodes(func: ast.AST):
    """Walk a function body without descending into nested scopes."""
    stack = list(ast.iter_child_nodes(func))
    while stack:
        node = stack.pop()
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef, ast.Lambda, ast.ClassDef)):
            continue
        yield node
        stack.extend(ast.iter_child_nodes(node))


def _is_none(node: Optional[ast.AST]) -> bool:
    return node is None or (isinstance(node, ast.Constant) and node.value is None)


_LINE = re.compile(r"[^\r\n]*(?:\r\n|\r|\n)|[^\r\n]+$")


class _Segments:
    """ast.get_source_segment without re-splitting the whole file per call."""

    def __init__(self, text: str) -> None:
        self._lines = _LINE.findall(text)
        self._encoded: dict[int, bytes] = {}

    def _line(self, i: int) -> bytes:
        if i not in self._encoded:
            self._encoded[i] = self._lines[i].encode()
        return self._encoded[i]

    def __call__(self, node: ast.AST) -> str:
        first, last = node.lineno - 1, node.end_lineno - 1
        start, end = node.col_offset, node.end_col_offset
        if first == last:
            return self._line(first)[start:end].decode()
        head = self._line(first)[start:].decode()
        tail = self._line(last)[:end].decode()
        return "".join([head, *self._lines[first + 1:last], tail])


def _python_unit(file: SourceFile, segment: _Segments, node, in_class: bool) -> FunctionUnit:
    a = node.args
    ordered = list(a.posonlyargs) + list(a.args)
    if a.vararg:
        ordered.append(a.vararg)
    ordered += list(a.kwonlyargs)
    if a.kwarg:
        ordered.append(a.kwarg)
    if in_class and ordered and ordered[0].arg in ("self", "cls") and (a.posonlyargs or a.args):
        ordered = ordered[1:]
    params = tuple(
        ParamFact(arg.arg, ast.unparse(arg.annotation) if arg.annotation else None, i)
        for i, arg in enumerate(ordered)
    )

    returns_value = node.returns is not None and not _is_none(node.returns)
    raises = []
    for sub in _own_nodes(node):
        if isinstance(sub, ast.Return) and not _is_none(sub.value):
            returns_value = True
        elif isinstance(sub, (ast.Yield, ast.YieldFrom)):
            returns_value = True
        elif isinstance(sub, ast.Raise) and sub.exc is not None:
            exc = sub.exc.func if isinstance(sub.exc, ast.Call) else sub.exc
            if isinstance(exc, (ast.Name, ast.Attribute)):
                name = ast.unparse(exc)
                if _is_type_name(name):
                    raises.append(name)

    raw_comment = None
    first = node.body[0] if node.body else None
    if (
        isinstance(first, ast.Expr)
        and isinstance(first.value, ast.Constant)
        and isinstance(first.value.value, str)
    ):
        raw_comment = segment(first.value)

    sig = SignatureInfo(
        function_name=node.name,
        params=params,
        returns_value=returns_value,
        return_type=ast.unparse(node.returns) if node.returns is not None else None,
        observed_raises=_dedup(raises),
    )
    return FunctionUnit(
        lang=SourceLang.PYTHON,
        signature=sig,
        code_text=segment(node),
        raw_comment=raw_comment,
        provenance=Provenance(file.repo_id, file.path, node.lineno),
    )


def _extract_python(file: SourceFile) -> list[FunctionUnit]:
    try:
        tree = ast.parse(file.text)
    except SyntaxError as exc:
        raise ExtractionError(file.path, exc.lineno or 1, exc.msg) from None
    except ValueError as exc:
        raise ExtractionError(file.path, 1, str(exc)) from None

    units: list[FunctionUnit] = []
    segment = _Segments(file.text)

    def visit(node: ast.AST, in_class: bool) -> None:
        for child in ast.iter_child_nodes(node):
            if isinstance(child, (ast.FunctionDef, ast.AsyncFunctionDef)):
                units.append(_python_unit(file, segment, child, in_class))
                visit(child, False)
            elif isinstance(child, ast.ClassDef):
                visit(child, True)
            else:
                visit(child, in_class)

    visit(tree, False)
    # raise order comes from a stack walk; re-sort by first textual appearance
    return [_order_raises(u) for u in units]


def _order_raises(unit: FunctionUnit) -> FunctionUnit:
    raises = unit.signature.observed_raises
    if len(raises) < 2:
        return unit
    ordered = tuple(sorted(raises, key=lambda r: (unit.code_text.find(r), r)))
    sig = SignatureInfo(**{**unit.signature.__dict__, "observed_raises": ordered})
    return FunctionUnit(unit.lang, sig, unit.code_text, unit.raw_comment, unit.provenance)


# --------------------------------------------------------------------------
# brace languages

_IDENT = r"[A-Za-z_$][\w$]*"
_BLANK_LINE = re.compile(r"\n[ \t]*\n")
_WS = re.compile(r"\s*")


def _split_top(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside (), [], {} and <>."""
    parts, depth, cur = [], 0, []
    for c in text:
        if c in "([{<":
            depth += 1
        elif c in ")]}>":
            depth = max(0, depth - 1)
        if c == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(c)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _collapse(text: str) -> str:
    return re.sub(r"\s+", " ", text).strip()


@dataclass
class _Found:
    name: str
    decl_start: int
    end: int  # exclusive
    body: tuple[int, int]  # offsets of the body region (for return/throw scans)
    params: tuple[ParamFact, ...]
    returns_value: Optional[bool] = None
    return_type: Optional[str] = None
    declared_exceptions: tuple[str, ...] = ()
    expression_body: bool = False


class _Scanner:
    lang: SourceLang
    doc_kind = "doc"

    def __init__(self, file: SourceFile, masked: str, comments: list[Comment], pairs: dict[int, int]):
        self.file = file
        self.text = file.text
        self.masked = masked
        self.comments = comments
        self.cindex = CommentIndex(comments)
        self.pairs = pairs
        self.lines = LineIndex(file.text)
        self._brace_opens = sorted(i for i in pairs if masked[i] == "{")

    # -- helpers ---------------------------------------------------------
    def skip_ws(self, i: int) -> int:
        return _WS.match(self.masked, i).end()

    def enclosing_brace(self, i: int) -> Optional[int]:
        k = bisect.bisect_left(self._brace_opens, i) - 1
        while k >= 0:
            o = self._brace_opens[k]
            if self.pairs[o] > i:
                return o
            k -= 1
        return None

    def header_start(self, i: int) -> int:
        """Offset after the previous ``;``, ``{`` or ``}`` outside parentheses."""
        depth = 0
        j = i - 1
        m = self.masked
        while j >= 0:
            c = m[j]
            if c in ")]":
                depth += 1
            elif c in "([":
                if depth == 0:
                    return j + 1
                depth -= 1
            elif depth == 0 and c in ";{}":
                return j + 1
            j -= 1
        return 0

    def skip_annotations(self, i: int, limit: int, opener: str) -> int:
        """Skip Java ``@Ann(...)`` or C# ``[Attr(...)]`` prefixes."""
        m = self.masked
        while True:
            i = self.skip_ws(i)
            if i >= limit:
                return i
            if opener == "@" and m[i] == "@" and not m.startswith("@interface", i):
                mm = re.compile(r"@\s*[\w$.]+\s*").match(m, i)
                j = mm.end()
                if j < len(m) and m[j] == "(" and j in self.pairs:
                    j = self.pairs[j] + 1
                i = j
            elif opener == "[" and m[i] == "[" and i in self.pairs:
                i = self.pairs[i] + 1
            else:
                return i

    def attached_comment(self, decl_start: int) -> Optional[str]:
        k = self.cindex.last_before(decl_start)
        if k is None:
            return None
        c = self.comments[k]
        gap = self.masked[c.end:decl_start]
        if _BLANK_LINE.search(gap):
            return None
        if not self.gap_ok(gap):
            return None
        return self.collect(k)

    def gap_ok(self, gap: str) -> bool:
        return not gap.strip()

    def collect(self, k: int) -> Optional[str]:
        c = self.comments[k]
        if c.kind != "doc":
            return None
        return self.text[c.start:c.end]

    def collect_line_run(self, k: int, prefix: str) -> Optional[str]:
        """Contiguous whole-line ``prefix`` comments ending with comment ``k``."""
        first = last = k
        if not self._is_run_line(k, prefix):
            return None
        while first > 0 and self._is_run_line(first - 1, prefix):
            prev, cur = self.comments[first - 1], self.comments[first]
            if self.lines.line(cur.start) - self.lines.line(prev.start) != 1:
                break
            first -= 1
        return self.text[self.comments[first].start:self.comments[last].end]

    def _is_run_line(self, k: int, prefix: str) -> bool:
        c = self.comments[k]
        if c.kind != "line" or not self.text.startswith(prefix, c.start):
            return False
        if prefix == "//" and self.text.startswith("///", c.start) and self.lang is SourceLang.GO:
            return True
        if prefix == "///" and self.text.startswith("////", c.start):
            return False
        line_start = self.lines.line_start(self.lines.line(c.start))
        return not self.text[line_start:c.start].strip()

    def strip_nested(self, start: int, end: int, spans: list[tuple[int, int]]) -> str:
        """Masked body text with nested function bodies blanked out.

        ``spans`` must be sorted; they are either nested or disjoint.
        """
        parts, pos = [], start
        for s, e in spans[bisect.bisect_left(spans, (start, end + 1)):]:
            if s >= end:
                break
            if e > end or s < pos:
                continue
            parts += [self.masked[pos:s], " " * (e - s)]
            pos = e
        parts.append(self.masked[pos:end])
        return "".join(parts)

    def anonymous_bodies(self) -> list[tuple[int, int]]:
        return []

    def find(self) -> list[_Found]:
        raise NotImplementedError

    def run(self) -> list[FunctionUnit]:
        found = self.find()
        nested_spans = sorted(set([f.body for f in found] + self.anonymous_bodies()))
        units = []
        seen = set()
        for f in found:
            if f.decl_start in seen:
                continue
            seen.add(f.decl_start)
            body_text = self.strip_nested(f.body[0], f.body[1], nested_spans)
            units.append(self.build(f, body_text))
        return units

    def build(self, f: _Found, body_text: str) -> FunctionUnit:
        returns_value = f.returns_value
        if returns_value is None:
            returns_value = f.expression_body or bool(_RETURN_EXPR.search(body_text))
        raises: tuple[str, ...] = ()
        if self.lang in (SourceLang.CSHARP, SourceLang.JAVASCRIPT):
            raises = _dedup(
                m.group(1) for m in _THROW.finditer(body_text) if _is_type_name(m.group(1))
            )
        sig = SignatureInfo(
            function_name=f.name,
            params=f.params,
            returns_value=returns_value,
            return_type=f.return_type,
            declared_exceptions=f.declared_exceptions,
            observed_raises=raises,
        )
        return FunctionUnit(
            lang=self.lang,
            signature=sig,
            code_text=self.text[f.decl_start:f.end],
            raw_comment=self.attached_comment(f.decl_start),
            provenance=Provenance(self.file.repo_id, self.file.path, self.lines.line(f.decl_start)),
        )


_RETURN_EXPR = re.compile(r"(?<![\w$.])return\b(?![ \t]*(?:[;}\n]|$))")
_THROW = re.compile(r"(?<![\w$.])throw\s+(?:new\s+)?([A-Za-z_$][\w$]*(?:\s*\.\s*[A-Za-z_$][\w$]*)*)")


# -- Java ---------------------------------------------------------------

_JAVA_MODIFIERS = {
    "public", "private", "protected", "static", "final", "abstract", "synchronized",
    "native", "default", "strictfp", "transient", "volatile", "sealed", "non-sealed",
}
_JAVA_NOT_NAMES = {
    "if", "for", "while", "switch", "catch", "synchronized", "try", "return", "new",
    "throw", "else", "do", "super", "this", "assert", "case", "yield",
}
_JAVA_BAD_HEADER = {
    "new", "return", "class", "interface", "enum", "record", "extends", "implements",
    "throw", "else", "case", "import", "package", "assert", "yield", "do",
}
_NAME_PAREN = re.compile(r"(?<![\w$.])(" + _IDENT + r")\s*\(")
_TYPE_TOKENS = re.compile(r"[\w$]+|\.\.\.|[<>\[\],.?&]|\S")


def _parse_type_header(tokens: list[str], modifiers: set[str], annotation: str) -> Optional[list[str]]:
    """Strip modifiers/annotations/type parameters; return the return-type tokens."""
    i = 0
    while i < len(tokens):
        t = tokens[i]
        if t in modifiers:
            i += 1
        elif t == annotation and i + 1 < len(tokens):
            i += 2
        elif t == "<" and annotation == "@":
            depth = 0
            while i < len(tokens):
                depth += tokens[i] == "<"
                depth -= tokens[i] == ">"
                i += 1
                if depth == 0:
                    break
        else:
            break
    rest = tokens[i:]
    depth = 0
    for t in rest:
        if t == "<":
            depth += 1
        elif t == ">":
            depth -= 1
        elif t == "," and depth <= 0:
            return None
        elif not re.fullmatch(r"[\w$]+|\.\.\.|[\[\].?&]", t):
            if t not in ("(", ")"):
                return None
    if depth != 0:
        return None
    return rest


def _java_param(text: str, position: int) -> Optional[ParamFact]:
    text = re.sub(r"@\s*[\w$.]+(\s*\([^()]*\))?", " ", text)
    text = re.sub(r"\bfinal\b", " ", text)
    m = re.fullmatch(r"\s*(.+?)\s*(\.\.\.)?\s*(" + _IDENT + r")\s*((?:\[\s*\]\s*)*)", text, re.S)
    if not m or not m.group(1).strip():
        return None
    type_text = _collapse(m.group(1)) + (m.group(2) or "") + re.sub(r"\s", "", m.group(4) or "")
    if not re.fullmatch(r"[\w$<>\[\],.?&\s]+(\.\.\.)?", type_text):
        return None
    return ParamFact(m.group(3), type_text, position)


class _JavaScanner(_Scanner):
    lang = SourceLang.JAVA

    def gap_ok(self, gap: str) -> bool:
        return not re.sub(r"@\s*[\w$.]+(\s*\([^()]*\))?", "", gap).strip()

    def find(self) -> list[_Found]:
        m = self.masked
        found = []
        for mm in _NAME_PAREN.finditer(m):
            name = mm.group(1)
            if name in _JAVA_NOT_NAMES:
                continue
            open_i = mm.end() - 1
            close_i = self.pairs.get(open_i)
            if close_i is None:
                continue
            j = self.skip_ws(close_i + 1)
            throws: tuple[str, ...] = ()
            tm = re.compile(r"throws\b([^{;]*)").match(m, j)
            if tm:
                throws = tuple(t for t in _split_top(tm.group(1)) if t)
                throws = tuple(re.sub(r"\s+", "", t) for t in throws)
                j = tm.end()
            if j >= len(m) or m[j] != "{":
                continue
            hs = self.header_start(mm.start())
            decl = self.skip_annotations(hs, mm.start(), "@")
            tokens = _TYPE_TOKENS.findall(m[decl:mm.start()])
            if any(t in _JAVA_BAD_HEADER for t in tokens):
                continue
            ret = _parse_type_header(tokens, _JAVA_MODIFIERS, "@")
            if ret is None:
                continue
            params = self.params(m[open_i + 1:close_i])
            if params is None:
                continue
            if decl >= mm.start():
                decl = mm.start()
            ret_text = _collapse(" ".join(ret)).replace(" .", ".").replace(". ", ".") or None
            body_close = self.pairs[j]
            found.append(
                _Found(
                    name=name,
                    decl_start=decl,
                    end=body_close + 1,
                    body=(j, body_close + 1),
                    params=params,
                    returns_value=ret_text is not None and ret_text != "void",
                    return_type=ret_text,
                    declared_exceptions=throws,
                )
            )
        return found

    def params(self, text: str) -> Optional[tuple[ParamFact, ...]]:
        if not text.strip():
            return ()
        out = []
        for part in _split_top(text):
            p = _java_param(part, len(out))
            if p is None:
                return None
            if p.name == "this":
                continue
            out.append(p)
        return tuple(out)


# -- C# -----------------------------------------------------------------

_CS_MODIFIERS = {
    "public", "private", "protected", "internal", "static", "virtual", "override",
    "abstract", "sealed", "async", "extern", "unsafe", "new", "partial", "readonly",
    "volatile", "file", "required", "ref",
}
_CS_NOT_NAMES = {
    "if", "for", "foreach", "while", "switch", "catch", "using", "lock", "fixed",
    "return", "nameof", "typeof", "sizeof", "default", "when", "checked", "unchecked",
    "get", "set", "init", "add", "remove", "base", "this", "new", "throw", "else",
    "await", "stackalloc", "is", "as", "in", "out", "where", "select", "operator",
}
_CS_BAD_HEADER = {
    "return", "class", "struct", "interface", "enum", "record", "operator", "implicit",
    "explicit", "delegate", "event", "throw", "else", "case", "namespace", "using",
    "await", "var", "goto", "yield",
}
_CS_NAME_PAREN = re.compile(
    r"(?<![\w.])([A-Za-z_]\w*)\s*(<(?:[^<>(){};=]|<[^<>(){};=]*>)*>)?\s*\("
)
_CS_PARAM_MODS = re.compile(r"^(?:(?:this|ref|out|in|params|scoped|readonly)\s+)+")
_CS_NO_VALUE = {"void", "Task", "ValueTask", "System.Threading.Tasks.Task"}


class _CSharpScanner(_Scanner):
    lang = SourceLang.CSHARP

    def gap_ok(self, gap: str) -> bool:
        i = 0
        while True:
            i = _WS.match(gap, i).end()
            if i >= len(gap):
                return True
            if gap[i] != "[":
                return False
            depth = 0
            while i < len(gap):
                depth += gap[i] == "["
                depth -= gap[i] == "]"
                i += 1
                if depth == 0:
                    break

    def collect(self, k: int) -> Optional[str]:
        return self.collect_line_run(k, "///")

    def find(self) -> list[_Found]:
        m = self.masked
        found = []
        for mm in _CS_NAME_PAREN.finditer(m):
            name = mm.group(1)
            if name in _CS_NOT_NAMES:
                continue
            open_i = mm.end() - 1
            close_i = self.pairs.get(open_i)
            if close_i is None:
                continue
            j = self.skip_ws(close_i + 1)
            ci = re.compile(r":\s*(base|this)\s*\(").match(m, j)
            if ci:
                j = self.skip_ws(self.pairs[ci.end() - 1] + 1)
            while m.startswith("where", j) and not re.match(r"[\w]", m[j + 5:j + 6]):
                k = j + 5
                while k < len(m) and m[k] not in "{;" and not m.startswith("=>", k):
                    if m[k] == "(" and k in self.pairs:
                        k = self.pairs[k]
                    k += 1
                j = k
            expression = False
            if m.startswith("=>", j):
                expression = True
                k = j + 2
                while k < len(m) and m[k] != ";":
                    if m[k] in "([{" and k in self.pairs:
                        k = self.pairs[k]
                    elif m[k] in ")]}":
                        break
                    k += 1
                if k >= len(m) or m[k] != ";":
                    continue
                body = (j + 2, k)
                end = k + 1
            elif j < len(m) and m[j] == "{":
                body = (j, self.pairs[j] + 1)
                end = body[1]
            else:
                continue
            hs = self.header_start(mm.start())
            decl = self.skip_annotations(hs, mm.start(), "[")
            header = m[decl:mm.start()]
            tokens = _TYPE_TOKENS.findall(header)
            if any(t in _CS_BAD_HEADER for t in tokens) or "=" in header or "~" in header:
                continue
            ret = _parse_type_header(tokens, _CS_MODIFIERS, "[")
            if ret is None:
                continue
            if tokens and tokens[-1] == "new" and not ret:
                continue
            params = self.params(m[open_i + 1:close_i])
            if params is None:
                continue
            ret_text = _collapse(" ".join(ret)).replace(" .", ".").replace(". ", ".")
            ret_text = re.sub(r"\s*([<>\[\],?])\s*", r"\1", ret_text).replace(",", ", ") or None
            # constructors have no return type; Task/ValueTask carry no value
            returns_value = ret_text is not None and ret_text not in _CS_NO_VALUE
            found.append(
                _Found(
                    name=name,
                    decl_start=decl if decl < mm.start() else mm.start(),
                    end=end,
                    body=body,
                    params=params,
                    returns_value=returns_value,
                    return_type=ret_text,
                    expression_body=expression,
                )
            )
        return found

    def params(self, text: str) -> Optional[tuple[ParamFact, ...]]:
        if not text.strip():
            return ()
        out = []
        for part in _split_top(text):
            part = re.sub(r"^\s*(\[[^\]]*\]\s*)+", "", part)
            part = _split_top(part, "=")[0]
            part = _CS_PARAM_MODS.sub("", part.strip())
            m = re.fullmatch(r"(.+?)\s*\b([A-Za-z_]\w*)", part, re.S)
            if not m or not re.fullmatch(r"[\w<>\[\],.?()\s]+", m.group(1)):
                return None
            type_text = re.sub(r"\s*([<>\[\],?])\s*", r"\1", _collapse(m.group(1))).replace(",", ", ")
            out.append(ParamFact(m.group(2), type_text, len(out)))
        return tuple(out)

    def anonymous_bodies(self) -> list[tuple[int, int]]:
        spans = []
        for mm in re.finditer(r"=>\s*\{|\bdelegate\s*(?:\([^)]*\))?\s*\{", self.masked):
            o = mm.end() - 1
            if o in self.pairs:
                spans.append((o, self.pairs[o] + 1))
        return spans


# -- Go -----------------------------------------------------------------

_GO_FUNC = re.compile(r"^[ \t]*func\b", re.M)
_GO_TYPE_KEYWORDS = {"chan", "func", "map", "struct", "interface"}


class _GoScanner(_Scanner):
    lang = SourceLang.GO

    def collect(self, k: int) -> Optional[str]:
        return self.collect_line_run(k, "//")

    def find(self) -> list[_Found]:
        m = self.masked
        found = []
        for mm in _GO_FUNC.finditer(m):
            decl = mm.end() - 4
            j = self.skip_ws(mm.end())
            if j < len(m) and m[j] == "(":
                if j not in self.pairs:
                    continue
                j = self.skip_ws(self.pairs[j] + 1)
            nm = re.compile(r"[A-Za-z_]\w*").match(m, j)
            if not nm:
                continue
            name = nm.group()
            j = self.skip_ws(nm.end())
            if j < len(m) and m[j] == "[":
                j = self.skip_ws(self.pairs[j] + 1)
            if j >= len(m) or m[j] != "(":
                continue
            open_i, close_i = j, self.pairs[j]
            k = close_i + 1
            body_open = None
            while k < len(m):
                c = m[k]
                if c in "([":
                    k = self.pairs[k] + 1
                elif c == "{":
                    if re.search(r"\b(interface|struct)\s*$", m[close_i + 1:k]):
                        k = self.pairs[k] + 1
                        continue
                    body_open = k
                    break
                elif c in "\n;":
                    break
                else:
                    k += 1
            if body_open is None:
                continue
            results = _collapse(m[close_i + 1:body_open])
            params = self.params(m[open_i + 1:close_i])
            body_close = self.pairs[body_open]
            found.append(
                _Found(
                    name=name,
                    decl_start=decl,
                    end=body_close + 1,
                    body=(body_open, body_close + 1),
                    params=params,
                    returns_value=bool(results),
                    return_type=results or None,
                )
            )
        return found

    def params(self, text: str) -> tuple[ParamFact, ...]:
        parts = [p for p in _split_top(text) if p]
        split = []
        for p in parts:
            mm = re.fullmatch(r"([A-Za-z_]\w*)\s+(\S.*)", p, re.S)
            if mm and mm.group(1) not in _GO_TYPE_KEYWORDS:
                split.append((mm.group(1), _collapse(mm.group(2))))
            else:
                split.append((None, _collapse(p)))
        named = any(name is not None for name, _ in split)
        out = []
        if named:
            pending: list[str] = []
            for name, rest in split:
                if name is None:
                    pending.append(rest)  # a bare identifier sharing the next type
                    continue
                for n in pending:
                    out.append((n, rest))
                pending = []
                out.append((name, rest))
            for n in pending:
                out.append((n, None))
        else:
            out = [("_", t) for _, t in split]
        return tuple(ParamFact(n, t, i) for i, (n, t) in enumerate(out))


# -- JavaScript -----------------------------------------------------------

_JS_NOT_NAMES = {
    "if", "for", "while", "switch", "catch", "with", "function", "return", "typeof",
    "new", "delete", "void", "await", "yield", "super", "import", "do", "else", "in",
    "of", "instanceof", "throw", "case",
}
_JS_FUNC_DECL = re.compile(r"(?<![\w$.])function\b\s*\*?\s*(" + _IDENT + r")?\s*\(")
_JS_BINDING = re.compile(
    r"(?:(?<![\w$.])(?:const|let|var)\s+)?(?<![\w$])("
    + _IDENT
    + r"(?:\s*\.\s*"
    + _IDENT
    + r")*)\s*(=|:)\s*(?:async\s+)?(?=function\b|\(|"
    + _IDENT
    + r"\s*=>)"
)
_JS_METHOD_PREFIX = re.compile(r"(?:(?:static|async|get|set)\s+)*\*?\s*$")


class _JavaScriptScanner(_Scanner):
    lang = SourceLang.JAVASCRIPT

    def _extend_back(self, i: int, words: tuple[str, ...]) -> int:
        m = self.masked
        while True:
            mm = re.search(r"(?<![\w$])(" + "|".join(words) + r")\s*$", m[max(0, i - 40):i])
            if not mm:
                return i
            i = max(0, i - 40) + mm.start()

    def _arrow_end(self, k: int) -> int:
        m = self.masked
        n = len(m)
        k = self.skip_ws(k)
        if k < n and m[k] == "{":
            return self.pairs[k] + 1
        while k < n:
            c = m[k]
            if c in "([{":
                k = self.pairs[k] + 1
                continue
            if c in ")]},":
                return k
            if c == ";":
                return k + 1
            if c == "\n":
                nxt = self.skip_ws(k)
                if nxt >= n or m[nxt] not in ".?:+-*/&|=<>":
                    return k
            k += 1
        return k

    def _with_semicolon(self, end: int) -> int:
        mm = re.compile(r"[ \t]*;").match(self.masked, end)
        return mm.end() if mm else end

    def params(self, text: str) -> tuple[ParamFact, ...]:
        out = []
        for part in _split_top(text):
            if not part:
                continue
            part = _split_top(part, "=")[0].strip()
            part = part[3:].strip() if part.startswith("...") else part
            if not re.fullmatch(_IDENT, part):
                part = _collapse(part)
            out.append(ParamFact(part, None, len(out)))
        return tuple(out)

    def _context(self, i: int) -> str:
        """Kind of the innermost brace around ``i``: class, object or block."""
        o = self.enclosing_brace(i)
        if o is None:
            return "top"
        before = self.masked[max(0, o - 200):o]
        if re.search(r"\bclass\b(?:\s+" + _IDENT + r")?(?:\s+extends\s+[^{;]+?)?\s*$", before):
            return "class"
        prev = before.rstrip()
        if not prev or prev[-1] in "=(:,[?" or re.search(r"(?<![\w$])return$", prev):
            return "object"
        return "block"

    def find(self) -> list[_Found]:
        m = self.masked
        found: list[_Found] = []
        claimed: set[int] = set()

        # const f = (...) => ..., obj.f = function (...) {...}, key: function (...) {...}
        for mm in _JS_BINDING.finditer(m):
            target, op = mm.group(1), mm.group(2)
            name = re.split(r"\s*\.\s*", target)[-1]
            if name in _JS_NOT_NAMES or target in ("const", "let", "var"):
                continue
            if op == ":" and self._context(mm.start()) != "object":
                continue
            k = mm.end()
            if m.startswith("function", k):
                fm = _JS_FUNC_DECL.match(m, k)
                if not fm:
                    continue
                open_i = fm.end() - 1
                close_i = self.pairs.get(open_i)
                if close_i is None:
                    continue
                b = self.skip_ws(close_i + 1)
                if b >= len(m) or m[b] != "{":
                    continue
                claimed.add(k)
                body = (b, self.pairs[b] + 1)
                end = self._with_semicolon(body[1])
                expression = False
            else:
                if m[k] == "(":
                    open_i, close_i = k, self.pairs.get(k)
                    if close_i is None:
                        continue
                    ptext = m[open_i + 1:close_i]
                    a = self.skip_ws(close_i + 1)
                else:
                    pm = re.compile(_IDENT).match(m, k)
                    ptext = pm.group()
                    a = self.skip_ws(pm.end())
                if not m.startswith("=>", a):
                    continue
                b = self.skip_ws(a + 2)
                expression = m[b:b + 1] != "{"
                end = self._arrow_end(a + 2)
                body = (b, end)
                if not expression:
                    end = self._with_semicolon(end)
                found.append(
                    _Found(name, mm.start(), end, body, self.params(ptext), expression_body=expression)
                )
                continue
            found.append(_Found(name, mm.start(), end, body, self.params(m[open_i + 1:close_i])))

        # function declarations
        for mm in _JS_FUNC_DECL.finditer(m):
            if mm.start() in claimed or not mm.group(1):
                continue
            name = mm.group(1)
            open_i = mm.end() - 1
            close_i = self.pairs.get(open_i)
            if close_i is None:
                continue
            b = self.skip_ws(close_i + 1)
            if b >= len(m) or m[b] != "{":
                continue
            prev = m[:mm.start()].rstrip()
            if prev and prev[-1] in "=(:,[?!&|+-" and not prev.endswith("=>"):
                continue  # named function expression used as a value
            start = self._extend_back(mm.start(), ("async", "export", "default"))
            start = self._extend_back(start, ("export", "default"))
            body = (b, self.pairs[b] + 1)
            found.append(_Found(name, start, body[1], body, self.params(m[open_i + 1:close_i])))

        # class members and object literal shorthand methods
        for mm in _NAME_PAREN.finditer(m):
            name = mm.group(1)
            if name in _JS_NOT_NAMES:
                continue
            open_i = mm.end() - 1
            close_i = self.pairs.get(open_i)
            if close_i is None:
                continue
            b = self.skip_ws(close_i + 1)
            if b >= len(m) or m[b] != "{":
                continue
            ctx = self._context(mm.start())
            if ctx not in ("class", "object"):
                continue
            line_start = m.rfind("\n", 0, mm.start()) + 1
            seg_start = max(line_start, self.header_start(mm.start()))
            prefix = m[seg_start:mm.start()]
            pm = _JS_METHOD_PREFIX.search(prefix)
            if pm is None or prefix[:pm.start()].strip(" \t,"):
                continue
            mods = prefix[pm.start():].split()
            if "get" in mods or "set" in mods:
                continue
            start = seg_start + pm.start()
            start = self.skip_ws(start)
            body = (b, self.pairs[b] + 1)
            found.append(_Found(name, start, body[1], body, self.params(m[open_i + 1:close_i])))
        return found

    def anonymous_bodies(self) -> list[tuple[int, int]]:
        spans = []
        for mm in re.finditer(r"=>\s*\{", self.masked):
            o = mm.end() - 1
            spans.append((o, self.pairs[o] + 1))
        for mm in _JS_FUNC_DECL.finditer(self.masked):
            open_i = mm.end() - 1
            close_i = self.pairs.get(open_i)
            if close_i is None:
                continue
            b = self.skip_ws(close_i + 1)
            if b < len(self.masked) and self.masked[b] == "{":
                spans.append((b, self.pairs[b] + 1))
        return spans


_SCANNERS = {
    SourceLang.JAVA: _JavaScanner,
    SourceLang.CSHARP: _CSharpScanner,
    SourceLang.GO: _GoScanner,
    SourceLang.JAVASCRIPT: _JavaScriptScanner,
}
