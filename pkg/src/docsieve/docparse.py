"""Parsers and canonical serializers for the supported doc comment styles.

Each parser takes normalizer output and returns a ParsedDoc, or raises
NotParseable when the text uses a section or tag in a way the style's
grammar cannot accommodate.  Prose without any sections parses fine.
"""

from __future__ import annotations

import re
from typing import Optional

from .model import DocParam, DocRaises, DocReturns, DocStyle, ParsedDoc


class NotParseable(ValueError):
    """The comment violates its style's grammar."""


def is_structured(doc: ParsedDoc) -> bool:
    return bool(doc.params) or doc.returns is not None or bool(doc.raises)


def parse_docstring(text: str, style: DocStyle) -> ParsedDoc:
    parser = _PARSERS[style]
    return parser(text)


def serialize(doc: ParsedDoc) -> str:
    return _SERIALIZERS[doc.style](doc)


# --------------------------------------------------------------------------
# shared helpers


def _fold(text: str) -> str:
    return " ".join(text.split())


def _split_description(lines: list[str]) -> tuple[str, Optional[str]]:
    """First paragraph folded into one line, remaining text stripped."""
    text = "\n".join(lines).strip()
    if not text:
        return "", None
    parts = re.split(r"\n[ \t]*\n", text, maxsplit=1)
    rest = parts[1].strip() if len(parts) > 1 else ""
    return _fold(parts[0]), rest or None


class _ParamCollector:
    """Keeps textual order; a repeated name replaces the earlier entry in place."""

    def __init__(self) -> None:
        self.params: dict[str, DocParam] = {}
        self.warnings: list[str] = []

    def add(self, param: DocParam) -> None:
        if param.name in self.params:
            self.warnings.append(f"duplicate param {param.name}: last occurrence wins")
        self.params[param.name] = param

    def result(self) -> tuple[DocParam, ...]:
        return tuple(self.params.values())


def _tag_blocks(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Split tag-style text into leading description lines and (tag, body) blocks."""
    description: list[str] = []
    blocks: list[list] = []
    for line in text.split("\n"):
        m = re.match(r"[ \t]*@(\w+)\b[ \t]*(.*)$", line)
        if m:
            blocks.append([m.group(1), m.group(2)])
        elif blocks:
            if line.strip():
                blocks[-1][1] = (blocks[-1][1] + " " + line.strip()).strip()
        else:
            description.append(line)
    return description, [(tag, body.strip()) for tag, body in blocks]


def _build(style, description, collector, returns, raises, warnings=()) -> ParsedDoc:
    short, long_desc = description
    return ParsedDoc(
        style=style,
        short_desc=short,
        long_desc=long_desc,
        params=collector.result(),
        returns=returns,
        raises=tuple(raises),
        warnings=tuple(collector.warnings) + tuple(warnings),
    )


# --------------------------------------------------------------------------
# GoogleDoc

_GOOGLE_HEADERS = {
    "Args": "args",
    "Arguments": "args",
    "Returns": "returns",
    "Yields": "returns",
    "Raises": "raises",
}
_GOOGLE_HEADER = re.compile(r"^(%s):[ \t]*$" % "|".join(_GOOGLE_HEADERS))
_GOOGLE_PARAM = re.compile(r"^(\*{0,2}[A-Za-z_][\w.]*)[ \t]*(?:\((.*?)\))?[ \t]*:(?:[ \t]+(.*))?$")
_GOOGLE_RAISES = re.compile(r"^([A-Za-z_][\w.]*)[ \t]*:(?:[ \t]+(.*))?$")
_GOOGLE_RETURN_TYPE = re.compile(r"^(?:[^:\s]+|[^:]*\])\s*:")


def _indent(line: str) -> int:
    return len(line) - len(line.lstrip(" \t"))


def _google_entries(lines: list[str], section: str) -> list[str]:
    """Group section lines into entries; deeper-indented lines continue an entry."""
    content = [line for line in lines if line.strip()]
    if not content:
        return []
    base = _indent(content[0])
    entries: list[str] = []
    for line in content:
        if _indent(line) <= base or not entries:
            if _indent(line) < base:
                raise NotParseable(f"{section}: entry indented less than the first entry")
            entries.append(line.strip())
        else:
            entries[-1] += " " + line.strip()
    return entries


def _parse_google(text: str) -> ParsedDoc:
    lines = text.split("\n")
    description: list[str] = []
    trailing: list[str] = []
    sections: list[tuple[str, list[str]]] = []
    target = description
    for line in lines:
        if _GOOGLE_HEADER.match(line):
            target = []
            sections.append((line.split(":")[0], target))
        elif target is not description and target is not trailing and line.strip() and _indent(line) == 0:
            # prose at the left margin ends the section
            target = trailing
            target.append(line)
        else:
            target.append(line)

    collector = _ParamCollector()
    returns: Optional[DocReturns] = None
    raises: list[DocRaises] = []
    warnings: list[str] = []
    for header, body in sections:
        kind = _GOOGLE_HEADERS[header]
        if kind == "args":
            for entry in _google_entries(body, header):
                m = _GOOGLE_PARAM.match(entry)
                if not m:
                    raise NotParseable(f"{header}: malformed entry {entry!r}")
                name, type_text, desc = m.group(1), m.group(2), m.group(3) or ""
                type_text = type_text.strip() if type_text and type_text.strip() else None
                collector.add(DocParam(name, type_text, desc.strip()))
        elif kind == "returns":
            if returns is not None:
                warnings.append(f"repeated {header} section: last occurrence wins")
            entry = " ".join(_google_entries(body, header))
            m = _GOOGLE_RETURN_TYPE.match(entry)
            if m:
                returns = DocReturns(entry[: m.end() - 1].strip(), entry[m.end():].strip())
            else:
                returns = DocReturns(None, entry)
        else:
            for entry in _google_entries(body, header):
                m = _GOOGLE_RAISES.match(entry)
                if not m:
                    raise NotParseable(f"{header}: malformed entry {entry!r}")
                raises.append(DocRaises(m.group(1), (m.group(2) or "").strip()))

    short, long_desc = _split_description(description)
    extra = "\n".join(trailing).strip()
    if extra:
        long_desc = f"{long_desc}\n\n{extra}" if long_desc else extra
        if not short:
            short, long_desc = _split_description(long_desc.split("\n"))
    return _build(DocStyle.GOOGLE, (short, long_desc), collector, returns, raises, warnings)


def _serialize_google(doc: ParsedDoc) -> str:
    blocks = [b for b in (doc.short_desc, doc.long_desc) if b]
    if doc.params:
        rows = []
        for p in doc.params:
            head = f"{p.name} ({p.type_text})" if p.type_text else p.name
            rows.append(f"    {head}: {p.description}".rstrip())
        blocks.append("Args:\n" + "\n".join(rows))
    if doc.returns is not None:
        r = doc.returns
        body = f"{r.type_text}: {r.description}".rstrip() if r.type_text else r.description
        blocks.append("Returns:" + (f"\n    {body}" if body else ""))
    if doc.raises:
        rows = [f"    {r.type_text}: {r.description}".rstrip() for r in doc.raises]
        blocks.append("Raises:\n" + "\n".join(rows))
    return "\n\n".join(blocks)


# --------------------------------------------------------------------------
# JavaDoc


def _parse_javadoc(text: str) -> ParsedDoc:
    description, blocks = _tag_blocks(text)
    collector = _ParamCollector()
    returns: Optional[DocReturns] = None
    raises: list[DocRaises] = []
    warnings: list[str] = []
    for tag, body in blocks:
        if tag == "param":
            m = re.match(r"(\S+)(?:\s+(.*))?$", body)
            if not m:
                raise NotParseable("@param without a name")
            if m.group(1).startswith("<"):
                continue  # generic type parameter
            collector.add(DocParam(m.group(1), None, (m.group(2) or "").strip()))
        elif tag in ("return", "returns"):
            if returns is not None:
                warnings.append("repeated @return: last occurrence wins")
            returns = DocReturns(None, body)
        elif tag in ("throws", "exception"):
            m = re.match(r"(\S+)(?:\s+(.*))?$", body)
            if not m:
                raise NotParseable(f"@{tag} without an exception type")
            raises.append(DocRaises(m.group(1), (m.group(2) or "").strip()))
    return _build(DocStyle.JAVADOC, _split_description(description), collector, returns, raises, warnings)


def _description_block(doc: ParsedDoc) -> list[str]:
    if doc.short_desc and doc.long_desc:
        return [f"{doc.short_desc}\n\n{doc.long_desc}"]
    return [b for b in (doc.short_desc, doc.long_desc) if b]


def _serialize_javadoc(doc: ParsedDoc) -> str:
    lines = _description_block(doc)
    lines += [f"@param {p.name} {p.description}".rstrip() for p in doc.params]
    if doc.returns is not None:
        lines.append(f"@return {doc.returns.description}".rstrip())
    lines += [f"@throws {r.type_text} {r.description}".rstrip() for r in doc.raises]
    return "\n".join(lines)


# --------------------------------------------------------------------------
# JSDoc


def _braced(body: str) -> tuple[Optional[str], str]:
    """Split a leading ``{type}`` (balanced braces) from the rest of a tag body."""
    if not body.startswith("{"):
        return None, body
    depth = 0
    for i, c in enumerate(body):
        depth += c == "{"
        depth -= c == "}"
        if depth == 0:
            return body[1:i].strip(), body[i + 1:].strip()
    raise NotParseable("unterminated {type}")


def _parse_jsdoc(text: str) -> ParsedDoc:
    description, blocks = _tag_blocks(text)
    collector = _ParamCollector()
    returns: Optional[DocReturns] = None
    raises: list[DocRaises] = []
    warnings: list[str] = []
    tag_description = None
    for tag, body in blocks:
        if tag in ("param", "arg", "argument"):
            type_text, rest = _braced(body)
            m = re.match(r"(\[[^\]]*\]|[^\s\[\]]+)(?:\s+(.*))?$", rest)
            if not m:
                raise NotParseable(f"@{tag} without a name")
            name = m.group(1)
            if name.startswith("["):
                name = name[1:-1].split("=", 1)[0].strip()
                if not name:
                    raise NotParseable(f"@{tag} with an empty optional name")
            desc = re.sub(r"^-\s*", "", (m.group(2) or "").strip())
            collector.add(DocParam(name, type_text or None, desc))
        elif tag in ("return", "returns"):
            if returns is not None:
                warnings.append("repeated @returns: last occurrence wins")
            type_text, rest = _braced(body)
            returns = DocReturns(type_text or None, re.sub(r"^-\s*", "", rest))
        elif tag in ("throws", "exception"):
            type_text, rest = _braced(body)
            raises.append(DocRaises(type_text or "", re.sub(r"^-\s*", "", rest)))
        elif tag == "description":
            tag_description = body
    if not "\n".join(description).strip() and tag_description:
        description = tag_description.split("\n")
    return _build(DocStyle.JSDOC, _split_description(description), collector, returns, raises, warnings)


def _serialize_jsdoc(doc: ParsedDoc) -> str:
    lines = _description_block(doc)
    for p in doc.params:
        head = f"@param {{{p.type_text}}} {p.name}" if p.type_text else f"@param {p.name}"
        lines.append(f"{head} - {p.description}" if p.description else head)
    if doc.returns is not None:
        r = doc.returns
        head = f"@returns {{{r.type_text}}}" if r.type_text else "@returns"
        lines.append(f"{head} {r.description}".rstrip())
    for r in doc.raises:
        head = f"@throws {{{r.type_text}}}" if r.type_text else "@throws"
        lines.append(f"{head} {r.description}".rstrip())
    return "\n".join(lines)


# --------------------------------------------------------------------------
# XmlDoc

_XML_KNOWN = ("summary", "remarks", "param", "returns", "exception", "value", "typeparam")
_XML_ELEMENT = re.compile(
    r"<(%s)\b([^<>]*?)(?:/>|>(.*?)</\1\s*>)" % "|".join(_XML_KNOWN), re.S | re.I
)


def _xml_attr(attrs: str, name: str) -> Optional[str]:
    m = re.search(r"\b%s\s*=\s*(?:\"([^\"]*)\"|'([^']*)')" % name, attrs, re.I)
    if not m:
        return None
    return m.group(1) if m.group(1) is not None else m.group(2)


def _parse_xmldoc(text: str) -> ParsedDoc:
    for tag in _XML_KNOWN:
        opened = len(re.findall(r"<%s\b[^<>]*(?<!/)>" % tag, text, re.I))
        closed = len(re.findall(r"</%s\s*>" % tag, text, re.I))
        if opened != closed:
            raise NotParseable(f"unbalanced <{tag}>")
    elements = list(_XML_ELEMENT.finditer(text))
    if not elements:
        return _build(DocStyle.XMLDOC, _split_description(text.split("\n")), _ParamCollector(), None, [])

    collector = _ParamCollector()
    returns: Optional[DocReturns] = None
    raises: list[DocRaises] = []
    warnings: list[str] = []
    short, long_parts = "", []
    for m in elements:
        tag, attrs, body = m.group(1).lower(), m.group(2), m.group(3) or ""
        if tag == "summary":
            first, rest = _split_description(body.split("\n"))
            short = first if not short else f"{short} {first}"
            if rest:
                long_parts.append(rest)
        elif tag == "remarks":
            if body.strip():
                long_parts.append(body.strip())
        elif tag == "param":
            name = _xml_attr(attrs, "name")
            if not name:
                raise NotParseable("<param> without a name")
            collector.add(DocParam(name, None, _fold(body)))
        elif tag == "returns":
            if returns is not None:
                warnings.append("repeated <returns>: last occurrence wins")
            returns = DocReturns(None, _fold(body))
        elif tag == "exception":
            cref = _xml_attr(attrs, "cref")
            if not cref:
                raise NotParseable("<exception> without a cref")
            raises.append(DocRaises(cref, _fold(body)))
    long_desc = "\n\n".join(long_parts) or None
    return _build(DocStyle.XMLDOC, (short, long_desc), collector, returns, raises, warnings)


def _serialize_xmldoc(doc: ParsedDoc) -> str:
    if not is_structured(doc) and not doc.long_desc:
        return doc.short_desc
    lines = []
    if doc.short_desc:
        lines.append(f"<summary>{doc.short_desc}</summary>")
    if doc.long_desc:
        lines.append(f"<remarks>{doc.long_desc}</remarks>")
    lines += [f'<param name="{p.name}">{p.description}</param>' for p in doc.params]
    if doc.returns is not None:
        lines.append(f"<returns>{doc.returns.description}</returns>")
    lines += [f'<exception cref="{r.type_text}">{r.description}</exception>' for r in doc.raises]
    return "\n".join(lines)


# --------------------------------------------------------------------------
# GoDoc: no sections; kept as prose so Go records carry a description


def _parse_godoc(text: str) -> ParsedDoc:
    return _build(DocStyle.GODOC, _split_description(text.split("\n")), _ParamCollector(), None, [])


def _serialize_godoc(doc: ParsedDoc) -> str:
    return "\n".join(_description_block(doc))


_PARSERS = {
    DocStyle.GOOGLE: _parse_google,
    DocStyle.JAVADOC: _parse_javadoc,
    DocStyle.JSDOC: _parse_jsdoc,
    DocStyle.XMLDOC: _parse_xmldoc,
    DocStyle.GODOC: _parse_godoc,
}
_SERIALIZERS = {
    DocStyle.GOOGLE: _serialize_google,
    DocStyle.JAVADOC: _serialize_javadoc,
    DocStyle.JSDOC: _serialize_jsdoc,
    DocStyle.XMLDOC: _serialize_xmldoc,
    DocStyle.GODOC: _serialize_godoc,
}
