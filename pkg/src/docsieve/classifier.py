"""Structural completeness verdicts for documented functions."""

from __future__ import annotations

import dataclasses
import re
from typing import Optional

from .docparse import is_structured
from .model import (
    DocStyle,
    FunctionUnit,
    ParsedDoc,
    Reason,
    ReasonCode,
    SignatureInfo,
    SourceLang,
    StructureVerdict,
    Verdict,
)

# styles whose grammar carries parameter and return types
TYPED_STYLES = (DocStyle.GOOGLE, DocStyle.JSDOC)
_IDENTIFIER = re.compile(r"^[A-Za-z_$][\w$]*$")


def backfill_python_types(doc: ParsedDoc, sig: SignatureInfo) -> ParsedDoc:
    """Copy signature annotations into untyped GoogleDoc entries; never overwrite."""
    annotations = {p.name: p.declared_type for p in sig.params if p.declared_type}
    params = tuple(
        dataclasses.replace(p, type_text=annotations[_bare(p.name)])
        if not p.type_text and _bare(p.name) in annotations
        else p
        for p in doc.params
    )
    returns = doc.returns
    if returns is not None and not returns.type_text and sig.return_type and sig.return_type != "None":
        returns = dataclasses.replace(returns, type_text=sig.return_type)
    return dataclasses.replace(doc, params=params, returns=returns)


def _bare(name: str) -> str:
    return name.lstrip("*")


def _simple_type(name: str) -> str:
    return re.split(r"[.:]", name.strip())[-1]


def _empty(text: Optional[str]) -> bool:
    return text is None or not text.strip()


def go_rule(function_name: str, normalized: str) -> StructureVerdict:
    tokens = normalized.split()
    if tokens and tokens[0] == function_name:
        return StructureVerdict(Verdict.COMPLETE)
    return StructureVerdict(Verdict.UNSTRUCTURED, (Reason(ReasonCode.GO_NAME_MISMATCH),))


def classify(unit: FunctionUnit, normalized: str, doc: Optional[ParsedDoc]) -> StructureVerdict:
    """Complete / Incomplete / Unstructured with canonically sorted reasons.

    ``doc`` is None when the comment did not parse (and always for Go).
    """
    if unit.lang is SourceLang.GO:
        return go_rule(unit.signature.function_name, normalized)
    if doc is None:
        return StructureVerdict(Verdict.UNSTRUCTURED, (Reason(ReasonCode.NOT_PARSEABLE),))
    if not is_structured(doc):
        return StructureVerdict(Verdict.UNSTRUCTURED, (Reason(ReasonCode.NO_SECTIONS),))

    sig = unit.signature
    if doc.style is DocStyle.GOOGLE:
        doc = backfill_python_types(doc, sig)
    reasons: list[Reason] = []
    documented = {}
    for p in doc.params:
        documented.setdefault(_bare(p.name), p)
    sig_names = [p.name for p in sig.params]

    # (a) every parameter described, (b) typed where the style needs types
    for name in sig_names:
        entry = documented.get(_bare(name))
        if entry is None or _empty(entry.description):
            reasons.append(Reason(ReasonCode.MISSING_PARAM_DESC, name))
        elif doc.style in TYPED_STYLES and _empty(entry.type_text):
            reasons.append(Reason(ReasonCode.MISSING_TYPE, name))

    # (c) returns documented exactly when a value is returned
    has_returns = doc.returns is not None and not _empty(doc.returns.description)
    if sig.returns_value and not has_returns:
        reasons.append(Reason(ReasonCode.MISSING_RETURNS))
    elif not sig.returns_value and has_returns:
        reasons.append(Reason(ReasonCode.UNEXPECTED_RETURNS))
    elif sig.returns_value and doc.style in TYPED_STYLES and _empty(doc.returns.type_text):
        reasons.append(Reason(ReasonCode.MISSING_RETURN_TYPE))

    # (d) statically visible exceptions
    visible = sig.declared_exceptions if unit.lang is SourceLang.JAVA else sig.observed_raises
    described = {_simple_type(r.type_text) for r in doc.raises if not _empty(r.description)}
    for exc in dict.fromkeys(visible):
        if _simple_type(exc) not in described:
            reasons.append(Reason(ReasonCode.MISSING_RAISES, exc))

    # (e) no documented parameter that the signature lacks
    known = {_bare(n) for n in sig_names}
    for p in doc.params:
        name = _bare(p.name)
        if "." in name or not _IDENTIFIER.match(name):
            continue  # dotted JSDoc members and destructuring patterns
        if name not in known:
            reasons.append(Reason(ReasonCode.PHANTOM_PARAM, p.name))

    if not reasons:
        return StructureVerdict(Verdict.COMPLETE)
    return StructureVerdict(Verdict.INCOMPLETE, tuple(sorted(set(reasons), key=_reason_key)))


def _reason_key(reason: Reason) -> tuple[str, str]:
    return (reason.code.value, reason.subject or "")
