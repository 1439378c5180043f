"""Core data types shared by the extraction, parsing and corpus stages."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional, Tuple, Union


class SourceLang(str, enum.Enum):
    PYTHON = "Python"
    JAVA = "Java"
    GO = "Go"
    CSHARP = "CSharp"
    JAVASCRIPT = "JavaScript"


class DocStyle(str, enum.Enum):
    GOOGLE = "GoogleDoc"
    JAVADOC = "JavaDoc"
    GODOC = "GoDoc"
    XMLDOC = "XmlDoc"
    JSDOC = "JSDoc"


STYLE_FOR_LANG = {
    SourceLang.PYTHON: DocStyle.GOOGLE,
    SourceLang.JAVA: DocStyle.JAVADOC,
    SourceLang.GO: DocStyle.GODOC,
    SourceLang.CSHARP: DocStyle.XMLDOC,
    SourceLang.JAVASCRIPT: DocStyle.JSDOC,
}
LANG_FOR_STYLE = {style: lang for lang, style in STYLE_FOR_LANG.items()}


class NatLang(str, enum.Enum):
    RU = "ru"
    EN = "en"
    OTHER = "other"
    UNKNOWN = "unknown"


class Verdict(str, enum.Enum):
    COMPLETE = "Complete"
    INCOMPLETE = "Incomplete"
    UNSTRUCTURED = "Unstructured"


class ReasonCode(str, enum.Enum):
    MISSING_PARAM_DESC = "MISSING_PARAM_DESC"
    MISSING_TYPE = "MISSING_TYPE"
    MISSING_RETURN_TYPE = "MISSING_RETURN_TYPE"
    MISSING_RETURNS = "MISSING_RETURNS"
    UNEXPECTED_RETURNS = "UNEXPECTED_RETURNS"
    MISSING_RAISES = "MISSING_RAISES"
    PHANTOM_PARAM = "PHANTOM_PARAM"
    NOT_PARSEABLE = "NOT_PARSEABLE"
    NO_SECTIONS = "NO_SECTIONS"
    GO_NAME_MISMATCH = "GO_NAME_MISMATCH"


@dataclass(frozen=True, order=True)
class Reason:
    code: ReasonCode
    subject: Optional[str] = None

    def __str__(self) -> str:
        if self.subject is None:
            return self.code.value
        return f"{self.code.value}({self.subject})"

    @classmethod
    def parse(cls, text: str) -> "Reason":
        if text.endswith(")") and "(" in text:
            code, _, rest = text.partition("(")
            return cls(ReasonCode(code), rest[:-1])
        return cls(ReasonCode(text))


@dataclass(frozen=True)
class ParamFact:
    name: str
    declared_type: Optional[str] = None
    position: int = 0


@dataclass(frozen=True)
class SignatureInfo:
    function_name: str
    params: Tuple[ParamFact, ...] = ()
    returns_value: bool = False
    return_type: Optional[str] = None
    declared_exceptions: Tuple[str, ...] = ()
    observed_raises: Tuple[str, ...] = ()

    @property
    def param_names(self) -> Tuple[str, ...]:
        return tuple(p.name for p in self.params)


@dataclass(frozen=True)
class Provenance:
    repo_id: str
    file_path: str
    line: int


@dataclass(frozen=True)
class FunctionUnit:
    lang: SourceLang
    signature: SignatureInfo
    code_text: str
    raw_comment: Optional[str]
    provenance: Provenance

    @property
    def name(self) -> str:
        return self.signature.function_name


@dataclass(frozen=True)
class DocParam:
    name: str
    type_text: Optional[str] = None
    description: str = ""


@dataclass(frozen=True)
class DocReturns:
    type_text: Optional[str] = None
    description: str = ""


@dataclass(frozen=True)
class DocRaises:
    type_text: str
    description: str = ""


@dataclass(frozen=True)
class ParsedDoc:
    style: DocStyle
    short_desc: str = ""
    long_desc: Optional[str] = None
    params: Tuple[DocParam, ...] = ()
    returns: Optional[DocReturns] = None
    raises: Tuple[DocRaises, ...] = ()
    # parser diagnostics (duplicate tags etc.); not part of equality
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "style": self.style.value,
            "short_desc": self.short_desc,
            "long_desc": self.long_desc,
            "params": [
                {"name": p.name, "type": p.type_text, "description": p.description}
                for p in self.params
            ],
            "returns": None
            if self.returns is None
            else {"type": self.returns.type_text, "description": self.returns.description},
            "raises": [{"type": r.type_text, "description": r.description} for r in self.raises],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ParsedDoc":
        ret = data.get("returns")
        return cls(
            style=DocStyle(data["style"]),
            short_desc=data.get("short_desc", ""),
            long_desc=data.get("long_desc"),
            params=tuple(
                DocParam(p["name"], p.get("type"), p.get("description", ""))
                for p in data.get("params", [])
            ),
            returns=None if ret is None else DocReturns(ret.get("type"), ret.get("description", "")),
            raises=tuple(
                DocRaises(r.get("type") or "", r.get("description", "")) for r in data.get("raises", [])
            ),
        )


@dataclass(frozen=True)
class StructureVerdict:
    verdict: Verdict
    reasons: Tuple[Reason, ...] = ()

    @property
    def reason_strings(self) -> list[str]:
        return [str(r) for r in self.reasons]


@dataclass(frozen=True)
class CorpusRecord:
    unit: FunctionUnit
    normalized_comment: str
    parsed: Optional[ParsedDoc]
    verdict: StructureVerdict
    nat_lang: NatLang

    @property
    def sort_key(self) -> tuple:
        p = self.unit.provenance
        return (p.repo_id, p.file_path, p.line)


def percent(numerator: int, denominator: int) -> float:
    """Percentage rounded half-up to one decimal; 0.0 for an empty denominator."""
    if denominator == 0:
        return 0.0
    value = Decimal(100 * numerator) / Decimal(denominator)
    return float(value.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


@dataclass
class LangStats:
    """Counters for one source language; mirrors the collection and structure tables."""

    repos_total: int = 0
    repos_with_comments: int = 0
    functions_total: int = 0
    functions_with_comments: int = 0
    comments_total: int = 0
    comments_russian: int = 0
    complete: int = 0
    incomplete: int = 0
    unstructured: int = 0
    # per-stage exclusions; comments_total == dataset_records + sum of these
    excluded_autogenerated: int = 0
    excluded_duplicate: int = 0
    excluded_unknown_lang: int = 0
    excluded_other_lang: int = 0
    excluded_structure: int = 0
    excluded_length: int = 0
    dataset_records: int = 0

    @property
    def pct_repos_with_comments(self) -> float:
        return percent(self.repos_with_comments, self.repos_total)

    @property
    def pct_functions_with_comments(self) -> float:
        return percent(self.functions_with_comments, self.functions_total)

    @property
    def pct_russian(self) -> float:
        return percent(self.comments_russian, self.comments_total)

    @property
    def pct_complete_of_russian(self) -> float:
        return percent(self.complete, self.comments_russian)

    @property
    def excluded_total(self) -> int:
        return (
            self.excluded_autogenerated
            + self.excluded_duplicate
            + self.excluded_unknown_lang
            + self.excluded_other_lang
            + self.excluded_structure
            + self.excluded_length
        )

    def counts(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> dict:
        out: dict = self.counts()
        out["pct_repos_with_comments"] = self.pct_repos_with_comments
        out["pct_functions_with_comments"] = self.pct_functions_with_comments
        out["pct_russian"] = self.pct_russian
        out["pct_complete_of_russian"] = self.pct_complete_of_russian
        return out


@dataclass
class StatsReport:
    languages: dict[SourceLang, LangStats] = field(
        default_factory=lambda: {lang: LangStats() for lang in SourceLang}
    )
    counters: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, lang: SourceLang) -> LangStats:
        return self.languages[lang]

    def to_json(self) -> dict:
        return {
            "version": 1,
            "languages": {lang.value: self.languages[lang].to_json() for lang in SourceLang},
            "counters": dict(sorted(self.counters.items())),
        }

    @classmethod
    def from_json(cls, data: dict) -> "StatsReport":
        report = cls(counters=dict(data.get("counters", {})))
        names = {f.name for f in fields(LangStats)}
        for key, row in data.get("languages", {}).items():
            report.languages[SourceLang(key)] = LangStats(
                **{k: v for k, v in row.items() if k in names}
            )
        return report


def _validate_unit(unit: FunctionUnit) -> list[str]:
    problems = []
    sig = unit.signature
    if not isinstance(unit.lang, SourceLang):
        problems.append("unit lang must be a SourceLang")
    if not sig.function_name:
        problems.append("function_name must be nonempty")
    if not unit.code_text:
        problems.append("code_text must be nonempty")
    if unit.provenance.line < 1:
        problems.append("provenance line must be >= 1")
    positions = [p.position for p in sig.params]
    if positions != list(range(len(positions))):
        problems.append("param positions must be contiguous from 0")
    if any(not p.name for p in sig.params):
        problems.append("param names must be nonempty")
    if sig.declared_exceptions and unit.lang is not SourceLang.JAVA:
        problems.append("declared_exceptions only allowed for Java")
    if sig.observed_raises and unit.lang in (SourceLang.GO, SourceLang.JAVA):
        problems.append("observed_raises must be empty for Go and Java")
    return problems


def _validate_doc(doc: ParsedDoc, lang: SourceLang) -> list[str]:
    problems = []
    names = [p.name for p in doc.params]
    if len(set(names)) != len(names):
        problems.append("ParsedDoc param names must be unique")
    if any(not n for n in names):
        problems.append("ParsedDoc param names must be nonempty")
    if doc.style is DocStyle.GODOC and (doc.params or doc.returns or doc.raises):
        problems.append("GoDoc ParsedDoc must not have params, returns or raises")
    if doc.style is not STYLE_FOR_LANG[lang]:
        problems.append(f"ParsedDoc style {doc.style.value} does not match {lang.value}")
    return problems


def _validate_verdict(verdict: StructureVerdict) -> list[str]:
    if verdict.verdict is Verdict.COMPLETE and verdict.reasons:
        return ["Complete verdict must have empty reasons"]
    if verdict.verdict is not Verdict.COMPLETE and not verdict.reasons:
        return [f"{verdict.verdict.value} verdict must have reasons"]
    return []


def _validate_stats(stats: LangStats) -> list[str]:
    problems = [f"{name} must be non-negative" for name, v in stats.counts().items() if v < 0]
    if stats.complete + stats.incomplete + stats.unstructured > stats.comments_russian:
        problems.append("complete + incomplete + unstructured exceeds comments_russian")
    return problems


def validate(obj: Union[CorpusRecord, LangStats, StatsReport]) -> list[str]:
    """Return one message per violated invariant; an empty list means valid."""
    if isinstance(obj, StatsReport):
        return [f"{lang.value}: {msg}" for lang, s in obj.languages.items() for msg in _validate_stats(s)]
    if isinstance(obj, LangStats):
        return _validate_stats(obj)
    problems = _validate_unit(obj.unit)
    problems += _validate_verdict(obj.verdict)
    if obj.parsed is not None:
        problems += _validate_doc(obj.parsed, obj.unit.lang)
    if (obj.parsed is not None) != (obj.verdict.verdict is not Verdict.UNSTRUCTURED):
        problems.append("parsed must be present exactly when the verdict is not Unstructured")
    if obj.unit.raw_comment is None and obj.normalized_comment:
        problems.append("normalized_comment without raw_comment")
    return problems
