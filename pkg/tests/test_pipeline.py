import json
import os
import random
import shutil

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PIPELINE
from gen import make_record, random_records
from docsieve.extractor import SourceFile
from docsieve.model import LangStats, NatLang, SourceLang, StatsReport, Verdict, validate
from docsieve.pipeline import (
    ConfigError,
    ManifestError,
    OutputError,
    PipelineConfig,
    _WorkerSettings,
    compute_stats,
    dedup,
    ingest,
    is_autogenerated,
    length_filter,
    load_autogen_patterns,
    load_manifest,
    process_file,
    render_table,
    run,
    stats_table_path,
)

RECORD_FIELDS = [
    "repo_id", "file_path", "line", "source_lang", "function_name", "code", "raw_comment",
    "normalized_comment", "parsed", "verdict", "reasons", "nat_lang",
]

RU_DOC = '''def {name}(a: int, b: int) -> int:
    """Складывает два целых числа и возвращает их сумму без переполнения.

    Args:
        a (int): первое слагаемое, любое целое число
        b (int): второе слагаемое, любое целое число

    Returns:
        int: сумма двух переданных чисел
    """
    return a + b
'''


def write_repo(root, files: dict) -> str:
    for rel, content in files.items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(content, bytes):
            path.write_bytes(content)
        else:
            path.write_text(content, encoding="utf-8")
    return str(root)


def write_manifest(path, entries) -> str:
    path.write_text("".join(json.dumps(e, ensure_ascii=False) + "\n" for e in entries), encoding="utf-8")
    return str(path)


def fixture_config(tmp_path, **changes) -> PipelineConfig:
    config = PipelineConfig(
        manifest=str(PIPELINE / "manifest.jsonl"),
        out=str(tmp_path / "ds.jsonl"),
        stats=str(tmp_path / "st.json"),
    )
    for key, value in changes.items():
        setattr(config, key, value)
    return config


# --------------------------------------------------------------------------
# end to end


def test_fixture_corpus_composition(tmp_path):
    result = run(fixture_config(tmp_path))
    py = result.report[SourceLang.PYTHON]
    assert [r.unit.name for r in result.records] == ["polygon_area", "distance"]
    assert (py.complete, py.incomplete, py.unstructured, py.comments_russian) == (2, 1, 1, 4)
    assert (py.comments_total, py.functions_total, py.functions_with_comments) == (5, 5, 5)
    assert (py.repos_total, py.repos_with_comments) == (2, 2)
    assert (py.excluded_other_lang, py.excluded_structure, py.dataset_records) == (1, 2, 2)
    assert validate(result.report) == []
    for lang in SourceLang:
        s = result.report[lang]
        assert s.comments_total == s.dataset_records + s.excluded_total


def test_dataset_file_format(tmp_path):
    run(fixture_config(tmp_path))
    raw = (tmp_path / "ds.jsonl").read_bytes()
    assert b"\r\n" not in raw and raw.endswith(b"\n")
    lines = raw.decode("utf-8").split("\n")[:-1]
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert list(first) == RECORD_FIELDS
    assert first["repo_id"] == "repo-a" and first["file_path"] == "pkg/geometry.py"
    assert first["line"] == 4 and first["source_lang"] == "Python"
    assert first["verdict"] == "Complete" and first["reasons"] == [] and first["nat_lang"] == "ru"
    assert first["parsed"]["style"] == "GoogleDoc"
    assert [p["name"] for p in first["parsed"]["params"]] == ["xs", "ys"]
    assert "Вычисляет площадь" in lines[0]  # written as UTF-8, not \u escapes


def test_stats_files(tmp_path):
    result = run(fixture_config(tmp_path))
    data = json.loads((tmp_path / "st.json").read_text(encoding="utf-8"))
    assert data == result.report.to_json()
    assert data["languages"]["Python"]["pct_complete_of_russian"] == 50.0
    assert data["counters"] == {"files_processed": 2, "files_seen": 2}
    table = (tmp_path / "st.txt").read_text(encoding="utf-8")
    assert table == render_table(result.report)
    assert stats_table_path("out/stats") == "out/stats.txt"


def test_render_table_layout():
    report = StatsReport()
    go = report[SourceLang.GO]
    go.complete, go.unstructured, go.comments_russian, go.comments_total = 10880, 8396, 19276, 40000
    text = render_table(report)
    assert text.startswith("Collection\n")
    go_rows = [line for line in text.split("\n") if line.startswith("Go ")]
    assert "19,276" in go_rows[0] and "48.2%" in go_rows[0]
    assert go_rows[1].split() == ["Go", "56.4%", "10,880", "-", "8,396"]


def test_empty_manifest(tmp_path):
    manifest = tmp_path / "empty.jsonl"
    manifest.write_text("", encoding="utf-8")
    result = run(fixture_config(tmp_path, manifest=str(manifest)))
    assert result.records == []
    assert (tmp_path / "ds.jsonl").read_text() == ""
    assert all(v == 0 for s in result.report.languages.values() for v in s.counts().values())


def test_keep_incomplete_and_target_language(tmp_path):
    kept = run(fixture_config(tmp_path, keep_incomplete=True, min_len=1, max_len=10_000))
    assert [(r.unit.name, r.verdict.verdict) for r in kept.records] == [
        ("polygon_area", Verdict.COMPLETE),
        ("distance", Verdict.COMPLETE),
        ("centroid", Verdict.INCOMPLETE),
        ("rotate", Verdict.UNSTRUCTURED),
    ]
    english = run(fixture_config(tmp_path, target_lang=NatLang.EN, min_len=1, max_len=10_000))
    assert [r.unit.name for r in english.records] == ["scale_vector"]
    assert english.report[SourceLang.PYTHON].excluded_other_lang == 4


def test_worker_count_does_not_change_output(tmp_path):
    outputs = []
    for workers in (1, 2):
        d = tmp_path / str(workers)
        d.mkdir()
        run(fixture_config(d, workers=workers, keep_incomplete=True, min_len=1))
        outputs.append(((d / "ds.jsonl").read_bytes(), (d / "st.json").read_bytes(), (d / "st.txt").read_bytes()))
    assert outputs[0] == outputs[1]


def test_duplicates_across_repos_are_counted_once(tmp_path):
    a = write_repo(tmp_path / "a", {"m.py": RU_DOC.format(name="add")})
    b = write_repo(tmp_path / "b", {"m.py": RU_DOC.format(name="add")})
    result = run(PipelineConfig(roots=(a, b), min_len=1))
    py = result.report[SourceLang.PYTHON]
    assert [r.unit.provenance.repo_id for r in result.records] == ["a"]
    assert (py.comments_total, py.excluded_duplicate, py.comments_russian) == (2, 1, 1)


def test_autogenerated_comments_are_excluded_first(tmp_path):
    cs = (
        "class A {\n"
        "    /// <summary><auto-generated/> Этот код создан программой.</summary>\n"
        "    /// <param name=\"x\">значение</param>\n"
        "    public void F(int x) { }\n"
        "}\n"
    )
    root = write_repo(tmp_path / "gen", {"A.cs": cs})
    result = run(PipelineConfig(roots=(root,), min_len=1))
    s = result.report[SourceLang.CSHARP]
    assert (s.comments_total, s.excluded_autogenerated, s.comments_russian) == (1, 1, 0)


def test_extraction_failure_is_counted_not_fatal(tmp_path):
    root = write_repo(tmp_path / "r", {"bad.py": "def f(:\n", "good.py": RU_DOC.format(name="add")})
    result = run(PipelineConfig(roots=(root,), min_len=1))
    assert result.report.counters["extraction_failed"] == 1
    assert result.report.counters["files_processed"] == 1
    assert [r.unit.name for r in result.records] == ["add"]


def test_unwritable_output(tmp_path):
    config = fixture_config(tmp_path, out=str(tmp_path / "missing-dir" / "ds.jsonl"))
    with pytest.raises(OutputError):
        run(config)


@pytest.mark.parametrize(
    "changes, message",
    [
        ({"min_len": 0}, "min_len"),
        ({"min_len": 10, "max_len": 5}, "min_len"),
        ({"workers": 0}, "workers"),
        ({"roots": ("x",)}, "exactly one"),
        ({"profile": "/nonexistent/profile.tsv"}, "profile"),
        ({"detector": "nope"}, "unknown detector"),
    ],
)
def test_invalid_config(tmp_path, changes, message):
    with pytest.raises((ConfigError, ValueError), match=message):
        run(fixture_config(tmp_path, **changes))


# --------------------------------------------------------------------------
# ingestion


def test_manifest_paths_and_metadata():
    entries = load_manifest(str(PIPELINE / "manifest.jsonl"))
    assert [e.repo_id for e in entries] == ["repo-a", "repo-b"]
    assert entries[0].local_path == str(PIPELINE / "repo_a")
    assert (entries[0].description, entries[0].license_tag) == ("Геометрия", "MIT")
    assert (entries[1].description, entries[1].license_tag) == (None, None)


@pytest.mark.parametrize(
    "lines, message",
    [
        (['{"repo_id": "r", "local_path": "nowhere"}'], "not a readable directory"),
        (["{not json"], "not JSON"),
        (['["r", "."]'], "expected an object"),
        (['{"repo_id": "", "local_path": "."}'], "nonempty strings"),
        (['{"repo_id": "r", "local_path": "."}', '{"repo_id": "r", "local_path": "."}'], "duplicate"),
    ],
)
def test_manifest_invalid(tmp_path, lines, message):
    manifest = tmp_path / "m.jsonl"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    with pytest.raises(ManifestError, match=message):
        list(ingest(PipelineConfig(manifest=str(manifest))))


def test_unreadable_manifest(tmp_path):
    with pytest.raises(ManifestError, match="cannot read"):
        list(ingest(PipelineConfig(manifest=str(tmp_path / "absent.jsonl"))))


def test_ingest_order_filters_and_skips(tmp_path):
    root = write_repo(tmp_path / "r", {
        "b.py": "x = 1\r\n",
        "a/z.go": "package a\n",
        "a/y.JS": "﻿let x;\n",
        "c.rb": "puts 1\n",
        ".hidden/h.py": "x = 1\n",
        "bin.py": b"\x00\x01binary",
        "latin1.py": "x = 'é'\n".encode("latin-1"),
        "big.java": "//" + "x" * (2 * 1024 * 1024),
    })
    counters = {}
    files = list(ingest(PipelineConfig(roots=(root,)), counters))
    assert [(f.path, f.lang) for f in files] == [
        ("a/y.JS", SourceLang.JAVASCRIPT), ("a/z.go", SourceLang.GO), ("b.py", SourceLang.PYTHON),
    ]
    assert files[0].text == "let x;\n" and files[2].text == "x = 1\n"
    assert counters == {
        "files_seen": 6,
        "files_skipped_binary": 1,
        "files_skipped_undecodable": 1,
        "files_skipped_too_large": 1,
    }
    only_go = list(ingest(PipelineConfig(roots=(root,), languages=(SourceLang.GO,))))
    assert [f.path for f in only_go] == ["a/z.go"]
    extra = PipelineConfig(roots=(root,), languages=(SourceLang.PYTHON,))
    extra.extensions[".rb"] = SourceLang.PYTHON
    assert [f.path for f in ingest(extra)] == ["b.py", "c.rb"]


def test_roots_with_the_same_name_are_rejected(tmp_path):
    a = write_repo(tmp_path / "x" / "same", {"a.py": ""})
    b = write_repo(tmp_path / "y" / "same", {"b.py": ""})
    with pytest.raises(ManifestError, match="same"):
        list(ingest(PipelineConfig(roots=(a, b))))


# --------------------------------------------------------------------------
# per-record stages


@pytest.mark.parametrize(
    "raw, lang, expected",
    [
        ("/// <auto-generated/> Этот код создан программой.", SourceLang.CSHARP, True),
        ("/// <summary>Возвращает сумму.</summary>", SourceLang.CSHARP, False),
        ("/** Generated by webpack */", SourceLang.JAVA, False),
        ("/* eslint-disable */", SourceLang.JAVASCRIPT, True),
        ("/** THIS CODE WAS GENERATED BY a tool */", SourceLang.JAVASCRIPT, True),
        ('"""Generated by hand."""', SourceLang.PYTHON, False),
    ],
)
def test_is_autogenerated(raw, lang, expected):
    assert is_autogenerated(raw, lang) is expected


def test_autogen_pattern_file(tmp_path):
    path = tmp_path / "patterns.txt"
    path.write_text("# team conventions\n\nDO NOT EDIT\n  # indented comment\n", encoding="utf-8")
    patterns = load_autogen_patterns(str(path))
    assert patterns == ("DO NOT EDIT",)
    assert is_autogenerated("// do not edit", SourceLang.JAVASCRIPT, patterns)
    assert not is_autogenerated("/// <auto-generated/>", SourceLang.CSHARP, patterns)
    with pytest.raises(ConfigError):
        load_autogen_patterns(str(tmp_path / "absent.txt"))


def test_dedup_examples():
    a = make_record("r", "a.py", 1, "code1", "коммент1")
    same = make_record("r", "a.py", 9, "code1", "коммент1")
    same_comment = make_record("r", "b.py", 1, "code2", "коммент1")
    same_code = make_record("r", "c.py", 1, "code1", "коммент3")
    distinct = make_record("r", "d.py", 1, "code4", "коммент4")
    assert dedup([a, same]) == [a]
    assert dedup([a, same_comment]) == [a]
    assert dedup([a, same_code]) == [a]
    assert dedup([a, distinct]) == [a, distinct]


@pytest.mark.parametrize(
    "code_len, comment_len, expected",
    [(300, 500, True), (100, 500, False), (1000, 250, True), (1001, 500, False), (300, 249, False),
     (250, 1000, True)],
)
def test_length_filter(code_len, comment_len, expected):
    record = make_record("r", "a.py", 1, "c" * code_len, "к" * comment_len)
    assert length_filter(record, PipelineConfig()) is expected


@settings(max_examples=200)
@given(st.integers(0, 2**32))
def test_dedup_idempotent_and_monotone(seed):
    records = random_records(random.Random(seed))
    once = dedup(records)
    assert dedup(once) == once
    ids = [id(r) for r in records]
    assert [ids.index(id(r)) for r in once] == sorted(ids.index(id(r)) for r in once)
    assert len({r.unit.code_text for r in once}) == len(once) == len({r.normalized_comment for r in once})


def test_process_file_counts_undocumented_functions():
    text = RU_DOC.format(name="add") + "\n\ndef bare(x):\n    return x\n"
    result = process_file(SourceFile(SourceLang.PYTHON, "r", "m.py", text), _WorkerSettings("builtin", None, ()))
    assert result.functions_total == 2
    assert [(rec.unit.name, autogen) for rec, autogen in result.records] == [("add", False)]


def test_compute_stats_on_empty_input():
    result = compute_stats([], PipelineConfig(manifest="unused"), {})
    assert result.records == []
    assert result.report.to_json()["languages"]["Go"]["pct_russian"] == 0.0


@pytest.mark.parametrize(
    "field_pairs, pct_name, expected",
    [
        ({"repos_with_comments": 18535, "repos_total": 64440}, "pct_repos_with_comments", 28.8),
        ({"functions_with_comments": 305187, "functions_total": 1627726}, "pct_functions_with_comments", 18.7),
        ({"complete": 10880, "unstructured": 8396, "comments_russian": 19276}, "pct_complete_of_russian", 56.4),
        ({"comments_russian": 0}, "pct_russian", 0.0),
    ],
)
def test_report_percentages(field_pairs, pct_name, expected):
    assert getattr(LangStats(**field_pairs), pct_name) == expected


def test_fixture_corpus_is_relocatable(tmp_path):
    copy = tmp_path / "copy"
    shutil.copytree(PIPELINE, copy)
    result = run(PipelineConfig(manifest=str(copy / "manifest.jsonl")))
    assert len(result.records) == 2
    assert os.path.exists(copy / "manifest.jsonl")
