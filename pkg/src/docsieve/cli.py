"""Command-line interface: ``build``, ``inspect`` and ``stats``.

Exit codes: 0 success, 1 usage or configuration error, 2 I/O error,
3 invalid manifest.  Tables go to standard output, logs to standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .extractor import ExtractionError, SourceFile, extract_units, lang_for_path
from .langid import PROFILE_ENV, get_detector
from .model import NatLang, SourceLang, Verdict
from .pipeline import (
    ConfigError,
    ManifestError,
    OutputError,
    PipelineConfig,
    build_record,
    render_table,
    run,
)

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_MANIFEST = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _lang(value: str) -> SourceLang:
    for lang in SourceLang:
        if value.lower() in (lang.value.lower(), lang.name.lower()):
            return lang
    raise argparse.ArgumentTypeError(f"unknown language {value!r}")


def _languages(value: str) -> tuple[SourceLang, ...]:
    return tuple(_lang(v.strip()) for v in value.split(",") if v.strip())


def _extension(value: str) -> tuple[str, SourceLang]:
    ext, sep, lang = value.partition("=")
    if not sep or not ext.startswith("."):
        raise argparse.ArgumentTypeError(f"expected .EXT=LANG, got {value!r}")
    return ext.lower(), _lang(lang)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="docsieve", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a dataset and statistics report from repositories")
    b.add_argument("--config", help="JSON file with PipelineConfig fields; flags override it")
    src = b.add_mutually_exclusive_group()
    src.add_argument("--manifest", help="JSON Lines manifest of repositories (repo_id, local_path, ...)")
    src.add_argument("--root", action="append", dest="roots", metavar="DIR",
                     help="repository checkout directory; repeatable")
    b.add_argument("--out", help="dataset output path (JSON Lines)")
    b.add_argument("--stats", help="statistics output path (JSON; a .txt table is written beside it)")
    b.add_argument("--languages", type=_languages, help="comma-separated allowlist, e.g. Python,Go")
    b.add_argument("--min-len", type=int, help="minimum code/comment length in characters (default 250)")
    b.add_argument("--max-len", type=int, help="maximum code/comment length in characters (default 1000)")
    b.add_argument("--target-lang", choices=[n.value for n in NatLang if n is not NatLang.UNKNOWN],
                   help="natural language kept in the dataset (default ru)")
    b.add_argument("--autogen-patterns", help="file of autogenerated-comment patterns, one per line")
    b.add_argument("--workers", type=int, help="worker processes (default 1)")
    b.add_argument("--keep-incomplete", action="store_true", default=None,
                   help="keep Incomplete and Unstructured records in the dataset")
    b.add_argument("--ext", action="append", type=_extension, metavar=".EXT=LANG",
                   help="map an extra file extension to a language; repeatable")
    b.add_argument("--profile", help=f"language-detector profile (default: ${PROFILE_ENV} or bundled)")
    b.add_argument("--detector", help="registered language detector name (default builtin)")

    i = sub.add_parser("inspect", help="show extracted functions and their verdicts for one file")
    i.add_argument("path")
    i.add_argument("--function", help="only show functions with this name")
    i.add_argument("--profile", help="language-detector profile")

    s = sub.add_parser("stats", help="summarize verdicts and languages of a dataset file")
    s.add_argument("dataset")
    return parser


_CONFIG_KEYS = {
    "manifest", "roots", "out", "stats", "languages", "min_len", "max_len", "target_lang",
    "autogen_patterns", "workers", "keep_incomplete", "extensions", "profile", "detector",
}


def _config_from_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise OutputError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must hold a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"config {path}: unknown keys {sorted(unknown)}")
    try:
        if "languages" in data:
            data["languages"] = tuple(_lang(v) for v in data["languages"])
        if "roots" in data:
            data["roots"] = tuple(data["roots"])
        if "target_lang" in data:
            data["target_lang"] = NatLang(data["target_lang"])
        if "extensions" in data:
            data["extensions"] = {k.lower(): _lang(v) for k, v in data["extensions"].items()}
    except (argparse.ArgumentTypeError, ValueError, AttributeError, TypeError) as exc:
        raise ConfigError(f"config {path}: {exc}") from None
    return data


def _build_config(args: argparse.Namespace) -> PipelineConfig:
    values = _config_from_file(args.config) if args.config else {}
    flags = {
        "manifest": args.manifest,
        "roots": tuple(args.roots) if args.roots else None,
        "out": args.out,
        "stats": args.stats,
        "languages": args.languages,
        "min_len": args.min_len,
        "max_len": args.max_len,
        "target_lang": NatLang(args.target_lang) if args.target_lang else None,
        "autogen_patterns": args.autogen_patterns,
        "workers": args.workers,
        "keep_incomplete": args.keep_incomplete,
        "profile": args.profile,
        "detector": args.detector,
    }
    if flags["manifest"] is not None:
        values.pop("roots", None)
    if flags["roots"] is not None:
        values.pop("manifest", None)
    values.update({k: v for k, v in flags.items() if v is not None})
    config = PipelineConfig(**values)
    if args.ext:
        config.extensions.update(dict(args.ext))
    if not config.out or not config.stats:
        raise UsageError("build: --out and --stats are required (by flag or config file)")
    if config.manifest is None and not config.roots:
        raise UsageError("build: one of --manifest or --root is required")
    return config


def cmd_build(args: argparse.Namespace) -> int:
    config = _build_config(args)
    result = run(config)
    sys.stdout.write(render_table(result.report))
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    lang = lang_for_path(args.path)
    if lang is None:
        print(f"inspect: no language is mapped to {args.path}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.path, "rb") as fh:
            text = fh.read().decode("utf-8-sig").replace("\r\n", "\n")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"inspect: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        units = extract_units(SourceFile(lang, "-", args.path, text))
    except ExtractionError as exc:
        print(f"inspect: extraction failed: {exc}", file=sys.stderr)
        return EXIT_IO
    detector = get_detector("builtin", args.profile)
    shown = 0
    for unit in units:
        if args.function is not None and unit.name != args.function:
            continue
        shown += 1
        if unit.raw_comment is None:
            print(f"{unit.name}: no doc comment")
            continue
        record = build_record(unit, detector)
        line = f"{unit.name}: {record.verdict.verdict.value}, {record.nat_lang.value}"
        if record.verdict.reasons:
            line += f" [{', '.join(record.verdict.reason_strings)}]"
        print(line)
    if shown == 0:
        what = f"named {args.function!r} " if args.function is not None else ""
        print(f"inspect: no match: no function {what}in {args.path}", file=sys.stderr)
    return EXIT_OK


def summarize_dataset(lines: Sequence[str]) -> str:
    """Per-language verdict and language counts for dataset lines.

    Raises ValueError naming the 1-based line number of a malformed line.
    """
    verdicts = [v.value for v in Verdict]
    langs = [n.value for n in NatLang]
    counts = {lang: dict.fromkeys(verdicts + langs, 0) for lang in SourceLang}
    for n, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            row = counts[SourceLang(obj["source_lang"])]
            row[Verdict(obj["verdict"]).value] += 1
            row[NatLang(obj["nat_lang"]).value] += 1
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"line {n}: malformed record ({exc.__class__.__name__}: {exc})") from None
    header = ["Lang", "Records"] + [v.lower() for v in verdicts] + langs
    rows = [header]
    for lang in SourceLang:
        row = counts[lang]
        rows.append([lang.value, str(sum(row[v] for v in verdicts))] + [str(row[k]) for k in verdicts + langs])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    out = []
    for k, row in enumerate(rows):
        out.append("  ".join([row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]))
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"


def cmd_stats(args: argparse.Namespace) -> int:
    try:
        with open(args.dataset, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"stats: cannot read {args.dataset}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        table = summarize_dataset(lines)
    except ValueError as exc:
        print(f"stats: {args.dataset}: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(table)
    return EXIT_OK


_COMMANDS = {"build": cmd_build, "inspect": cmd_inspect, "stats": cmd_stats}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ManifestError as exc:
        print(f"manifest invalid: {exc}", file=sys.stderr)
        return EXIT_MANIFEST
    except (OutputError, OSError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
