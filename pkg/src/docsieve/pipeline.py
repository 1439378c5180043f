"""Corpus construction: ingest checkouts, classify every documented function,
filter, and write the dataset plus a statistics report.

Per-file work (extraction through language identification) is pure and may
run in worker processes.  Everything that crosses files (deduplication,
filters, counters) happens in a single merge step over records sorted by
(repo_id, path, line), so the worker count never changes the output.
"""

from __future__ import annotations

import functools
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .classifier import backfill_python_types, classify
from .docparse import NotParseable, parse_docstring
from .extractor import DEFAULT_EXTENSIONS, ExtractionError, SourceFile, extract_units
from .langid import DetectorProfile, get_detector, prepare_detection_text
from .model import (
    STYLE_FOR_LANG,
    CorpusRecord,
    DocStyle,
    FunctionUnit,
    LangStats,
    NatLang,
    ParsedDoc,
    SourceLang,
    StatsReport,
    Verdict,
)
from .normalizer import normalize

log = logging.getLogger(__name__)

MAX_FILE_BYTES = 2 * 1024 * 1024
BINARY_SNIFF_BYTES = 8192
AUTOGEN_LANGS = (SourceLang.CSHARP, SourceLang.JAVASCRIPT)
DEFAULT_AUTOGEN_PATTERNS = (
    "<auto-generated",
    "This code was generated by",
    "Этот код создан программой",
    "eslint-disable",
    "webpack",
    "Generated by",
)


class PipelineError(Exception):
    pass


class ManifestError(PipelineError):
    """MANIFEST_INVALID: the run cannot start."""


class ConfigError(PipelineError):
    pass


class OutputError(PipelineError):
    """An output file could not be written."""


@dataclass(frozen=True)
class RepoManifestEntry:
    repo_id: str
    local_path: str
    description: Optional[str] = None
    license_tag: Optional[str] = None


@dataclass
class PipelineConfig:
    manifest: Optional[str] = None
    roots: tuple[str, ...] = ()
    languages: tuple[SourceLang, ...] = tuple(SourceLang)
    min_len: int = 250
    max_len: int = 1000
    target_lang: NatLang = NatLang.RU
    autogen_patterns: Optional[str] = None
    out: Optional[str] = None
    stats: Optional[str] = None
    workers: int = 1
    keep_incomplete: bool = False
    extensions: dict[str, SourceLang] = field(default_factory=lambda: dict(DEFAULT_EXTENSIONS))
    profile: Optional[str] = None
    detector: str = "builtin"

    def check(self) -> None:
        if not 0 < self.min_len <= self.max_len:
            raise ConfigError(f"need 0 < min_len <= max_len, got {self.min_len}..{self.max_len}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if (self.manifest is None) == (not self.roots):
            raise ConfigError("give exactly one of a manifest or root directories")


# --------------------------------------------------------------------------
# ingestion


def load_manifest(path: str) -> list[RepoManifestEntry]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except (OSError, UnicodeDecodeError) as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from None
    base = os.path.dirname(os.path.abspath(path))
    entries: list[RepoManifestEntry] = []
    seen: set[str] = set()
    for n, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ManifestError(f"{path}:{n}: not JSON ({exc.msg})") from None
        if not isinstance(obj, dict):
            raise ManifestError(f"{path}:{n}: expected an object")
        repo_id, local_path = obj.get("repo_id"), obj.get("local_path")
        if not isinstance(repo_id, str) or not repo_id or not isinstance(local_path, str) or not local_path:
            raise ManifestError(f"{path}:{n}: repo_id and local_path must be nonempty strings")
        if repo_id in seen:
            raise ManifestError(f"{path}:{n}: duplicate repo_id {repo_id!r}")
        seen.add(repo_id)
        entries.append(
            RepoManifestEntry(
                repo_id=repo_id,
                local_path=os.path.normpath(os.path.join(base, local_path)),
                description=obj.get("description"),
                license_tag=obj.get("license_tag"),
            )
        )
    return entries


def repositories(config: PipelineConfig) -> list[RepoManifestEntry]:
    if config.manifest is not None:
        repos = load_manifest(config.manifest)
    else:
        repos = []
        for root in config.roots:
            repo_id = os.path.basename(os.path.normpath(root)) or root
            if any(r.repo_id == repo_id for r in repos):
                raise ManifestError(f"two roots share the repository name {repo_id!r}")
            repos.append(RepoManifestEntry(repo_id, os.path.normpath(root)))
    for repo in repos:
        if not os.path.isdir(repo.local_path) or not os.access(repo.local_path, os.R_OK | os.X_OK):
            raise ManifestError(f"repository {repo.repo_id!r}: {repo.local_path} is not a readable directory")
    return sorted(repos, key=lambda r: r.repo_id)


def _bump(counters: Optional[dict], key: str) -> None:
    if counters is not None:
        counters[key] = counters.get(key, 0) + 1


def ingest(config: PipelineConfig, counters: Optional[dict] = None) -> Iterator[SourceFile]:
    """Yield decodable source files in (repo_id, path) order."""
    allowed = {ext: lang for ext, lang in config.extensions.items() if lang in config.languages}
    for repo in repositories(config):
        paths = []
        for dirpath, dirnames, filenames in os.walk(repo.local_path):
            dirnames[:] = sorted(d for d in dirnames if not d.startswith("."))
            for name in filenames:
                ext = os.path.splitext(name)[1].lower()
                if ext in allowed:
                    full = os.path.join(dirpath, name)
                    rel = os.path.relpath(full, repo.local_path).replace(os.sep, "/")
                    paths.append((rel, full, allowed[ext]))
        for rel, full, lang in sorted(paths):
            _bump(counters, "files_seen")
            source = _read_source(full, counters)
            if source is not None:
                yield SourceFile(lang=lang, repo_id=repo.repo_id, path=rel, text=source)


def _read_source(path: str, counters: Optional[dict]) -> Optional[str]:
    try:
        if os.path.getsize(path) > MAX_FILE_BYTES:
            log.warning("skipping %s: larger than %d bytes", path, MAX_FILE_BYTES)
            _bump(counters, "files_skipped_too_large")
            return None
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        log.warning("skipping %s: %s", path, exc)
        _bump(counters, "files_skipped_unreadable")
        return None
    if b"\x00" in data[:BINARY_SNIFF_BYTES]:
        log.warning("skipping %s: binary content", path)
        _bump(counters, "files_skipped_binary")
        return None
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError:
        log.warning("skipping %s: not valid UTF-8", path)
        _bump(counters, "files_skipped_undecodable")
        return None
    return text.replace("\r\n", "\n")


# --------------------------------------------------------------------------
# per-record stages


def load_autogen_patterns(path: Optional[str]) -> tuple[str, ...]:
    if path is None:
        return DEFAULT_AUTOGEN_PATTERNS
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise ConfigError(f"cannot read autogenerated-pattern file {path}: {exc}") from None
    return tuple(line.strip() for line in lines if line.strip() and not line.lstrip().startswith("#"))


def is_autogenerated(
    raw_comment: str, lang: SourceLang, patterns: Iterable[str] = DEFAULT_AUTOGEN_PATTERNS
) -> bool:
    if lang not in AUTOGEN_LANGS:
        return False
    lowered = raw_comment.lower()
    return any(p.lower() in lowered for p in patterns)


def build_record(unit: FunctionUnit, detector) -> CorpusRecord:
    """Normalize, parse, classify and language-tag one documented unit."""
    normalized = normalize(unit.raw_comment, unit.lang)
    style = STYLE_FOR_LANG[unit.lang]
    doc: Optional[ParsedDoc] = None
    if style is not DocStyle.GODOC:
        try:
            doc = parse_docstring(normalized, style)
        except NotParseable:
            doc = None
        if doc is not None and style is DocStyle.GOOGLE:
            doc = backfill_python_types(doc, unit.signature)
    verdict = classify(unit, normalized, doc)
    nat_lang = detector(prepare_detection_text(doc, normalized, unit.lang, unit.signature.function_name))
    if verdict.verdict is Verdict.UNSTRUCTURED:
        parsed = None
    elif style is DocStyle.GODOC:
        parsed = parse_docstring(normalized, style)
    else:
        parsed = doc
    return CorpusRecord(unit, normalized, parsed, verdict, nat_lang)


def dedup(records: list[CorpusRecord]) -> list[CorpusRecord]:
    """Drop repeated (code, comment) pairs, then repeated code or comment alone.

    The first occurrence in input order wins; input is expected to be sorted.
    """
    pairs: set[tuple[str, str]] = set()
    unique_pairs = []
    for r in records:
        key = (r.unit.code_text, r.normalized_comment)
        if key not in pairs:
            pairs.add(key)
            unique_pairs.append(r)
    codes: set[str] = set()
    comments: set[str] = set()
    out = []
    for r in unique_pairs:
        if r.unit.code_text in codes or r.normalized_comment in comments:
            continue
        codes.add(r.unit.code_text)
        comments.add(r.normalized_comment)
        out.append(r)
    return out


def length_filter(record: CorpusRecord, config: PipelineConfig) -> bool:
    lo, hi = config.min_len, config.max_len
    return lo <= len(record.unit.code_text) <= hi and lo <= len(record.normalized_comment) <= hi


# --------------------------------------------------------------------------
# per-file work (runs in workers)


@dataclass(frozen=True)
class _WorkerSettings:
    detector: str
    profile: Optional[str]
    autogen_patterns: tuple[str, ...]


@dataclass
class FileResult:
    lang: SourceLang
    repo_id: str
    path: str
    functions_total: int = 0
    records: list = field(default_factory=list)  # (CorpusRecord, autogenerated)
    error: Optional[str] = None


@functools.lru_cache(maxsize=4)
def _detector_for(name: str, profile: Optional[str]):
    return get_detector(name, profile)


def process_file(file: SourceFile, settings: _WorkerSettings) -> FileResult:
    result = FileResult(file.lang, file.repo_id, file.path)
    try:
        units = extract_units(file)
    except ExtractionError as exc:
        result.error = str(exc)
        return result
    detector = _detector_for(settings.detector, settings.profile)
    result.functions_total = len(units)
    for unit in units:
        if unit.raw_comment is None:
            continue
        autogen = is_autogenerated(unit.raw_comment, unit.lang, settings.autogen_patterns)
        result.records.append((build_record(unit, detector), autogen))
    return result


# --------------------------------------------------------------------------
# merge, stats, output


@dataclass
class RunResult:
    records: list[CorpusRecord]
    report: StatsReport


def compute_stats(results: list[FileResult], config: PipelineConfig, counters: dict) -> RunResult:
    """Apply the cross-file stages in order and count every exclusion."""
    report = StatsReport(counters=dict(counters))
    stats = report.languages
    repos: dict[SourceLang, set] = {lang: set() for lang in SourceLang}
    repos_commented: dict[SourceLang, set] = {lang: set() for lang in SourceLang}
    staged: list[tuple[CorpusRecord, bool]] = []
    for res in sorted(results, key=lambda r: (r.repo_id, r.path)):
        if res.error is not None:
            log.warning("extraction failed: %s", res.error)
            report.counters["extraction_failed"] = report.counters.get("extraction_failed", 0) + 1
            continue
        report.counters["files_processed"] = report.counters.get("files_processed", 0) + 1
        s = stats[res.lang]
        repos[res.lang].add(res.repo_id)
        s.functions_total += res.functions_total
        s.functions_with_comments += len(res.records)
        s.comments_total += len(res.records)
        if res.records:
            repos_commented[res.lang].add(res.repo_id)
        staged.extend(res.records)
    for lang in SourceLang:
        stats[lang].repos_total = len(repos[lang])
        stats[lang].repos_with_comments = len(repos_commented[lang])

    staged.sort(key=lambda item: item[0].sort_key)
    records = []
    for record, autogen in staged:
        if autogen:
            stats[record.unit.lang].excluded_autogenerated += 1
        else:
            records.append(record)

    survivors = dedup(records)
    kept = {id(r) for r in survivors}
    for r in records:
        if id(r) not in kept:
            stats[r.unit.lang].excluded_duplicate += 1

    final = []
    for r in survivors:
        s = stats[r.unit.lang]
        if r.nat_lang is NatLang.UNKNOWN:
            s.excluded_unknown_lang += 1
            continue
        if r.nat_lang is not config.target_lang:
            s.excluded_other_lang += 1
            continue
        s.comments_russian += 1
        verdict = r.verdict.verdict
        if verdict is Verdict.COMPLETE:
            s.complete += 1
        elif verdict is Verdict.INCOMPLETE:
            s.incomplete += 1
        else:
            s.unstructured += 1
        if verdict is not Verdict.COMPLETE and not config.keep_incomplete:
            s.excluded_structure += 1
            continue
        if not length_filter(r, config):
            s.excluded_length += 1
            continue
        s.dataset_records += 1
        final.append(r)
    return RunResult(final, report)


def run(config: PipelineConfig) -> RunResult:
    config.check()
    patterns = load_autogen_patterns(config.autogen_patterns)
    if config.profile is not None:
        try:
            DetectorProfile.load(config.profile)
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot load detector profile {config.profile}: {exc}") from None
    get_detector(config.detector, config.profile)  # fail fast on unknown names
    settings = _WorkerSettings(config.detector, config.profile, patterns)
    counters: dict = {}
    files = list(ingest(config, counters))
    worker = functools.partial(process_file, settings=settings)
    if config.workers == 1 or len(files) <= 1:
        results = [worker(f) for f in files]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(worker, files, chunksize=max(1, len(files) // (config.workers * 4))))
    result = compute_stats(results, config, counters)
    if config.out is not None:
        write_dataset(result.records, config.out)
    if config.stats is not None:
        write_stats(result.report, config.stats)
    return result


def record_to_json(record: CorpusRecord) -> dict:
    unit = record.unit
    return {
        "repo_id": unit.provenance.repo_id,
        "file_path": unit.provenance.file_path,
        "line": unit.provenance.line,
        "source_lang": unit.lang.value,
        "function_name": unit.name,
        "code": unit.code_text,
        "raw_comment": unit.raw_comment,
        "normalized_comment": record.normalized_comment,
        "parsed": None if record.parsed is None else record.parsed.to_json(),
        "verdict": record.verdict.verdict.value,
        "reasons": record.verdict.reason_strings,
        "nat_lang": record.nat_lang.value,
    }


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from None


def write_dataset(records: list[CorpusRecord], path: str) -> None:
    _write_text(path, "".join(json.dumps(record_to_json(r), ensure_ascii=False) + "\n" for r in records))


def stats_table_path(stats_path: str) -> str:
    root, ext = os.path.splitext(stats_path)
    return (root if ext == ".json" else stats_path) + ".txt"


def write_stats(report: StatsReport, path: str) -> None:
    _write_text(path, json.dumps(report.to_json(), ensure_ascii=False, indent=2) + "\n")
    _write_text(stats_table_path(path), render_table(report))


def render_table(report: StatsReport) -> str:
    """Plain-text collection and structure tables."""

    def fmt(rows: list[list[str]]) -> str:
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = []
        for k, row in enumerate(rows):
            cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
            lines.append("  ".join(cells).rstrip())
            if k == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines)

    def n(v: int) -> str:
        return f"{v:,}"

    def pct(v: float) -> str:
        return f"{v:.1f}%"

    collection = [[
        "Lang", "Repos w/ comments", "Repos", "%", "Functions w/ comments", "Functions", "%",
        "Target-language comments", "Comments", "%",
    ]]
    structure = [["Lang", "% complete", "Complete", "Incomplete", "Unstructured"]]
    for lang in SourceLang:
        s: LangStats = report[lang]
        collection.append([
            lang.value, n(s.repos_with_comments), n(s.repos_total), pct(s.pct_repos_with_comments),
            n(s.functions_with_comments), n(s.functions_total), pct(s.pct_functions_with_comments),
            n(s.comments_russian), n(s.comments_total), pct(s.pct_russian),
        ])
        incomplete = "-" if lang is SourceLang.GO else n(s.incomplete)
        structure.append([
            lang.value, pct(s.pct_complete_of_russian), n(s.complete), incomplete, n(s.unstructured),
        ])
    return "Collection\n" + fmt(collection) + "\n\nStructure\n" + fmt(structure) + "\n"
