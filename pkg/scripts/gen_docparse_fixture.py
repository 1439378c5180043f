"""Generate the docparse agreement fixture from independent reference parsers.

Usage:
    NODE_PATH=/path/to/node_modules python scripts/gen_docparse_fixture.py \
        [--out tests/fixtures/docparse/agreement.json]

References (none of them is used by the package at runtime):
    GoogleDoc  docstring_parser (rr- fork)           pip install docstring_parser
    JavaDoc    javalang.javadoc                      pip install javalang
    JSDoc      doctrine (node, sloppy mode)          npm install doctrine
    XmlDoc     xml.etree.ElementTree from the stdlib

For each generated raw comment the expected value is the list of
(name, has_type, has_description) triples the reference reports.
"""

import argparse
import inspect
import json
import random
import subprocess
import xml.etree.ElementTree as ET

import docstring_parser
import javalang.javadoc

PER_STYLE = 50
SEED = 20240601

NAMES = ["value", "count", "path", "items", "key", "timeout", "callback", "limit", "data", "flag"]
TYPES = ["int", "str", "float", "bool", "list", "dict", "Optional[int]", "List[str]", "Dict[str, int]"]
JS_TYPES = ["number", "string", "boolean", "Object", "Array<string>", "function", "*", "Promise<void>"]
WORDS = (
    "значение число строка список путь к файлу ключ словаря время ожидания в секундах "
    "функция обратного вызова предел данные флаг признак результат ошибка элемент индекс"
).split()
SUMMARIES = [
    "Вычисляет итоговое значение.",
    "Загружает данные из файла.",
    "Проверяет корректность аргументов.",
    "Возвращает первый подходящий элемент.",
    "Сохраняет состояние на диск.",
]
EXCEPTIONS = ["ValueError", "KeyError", "IOException", "IllegalArgumentException", "TypeError"]


def phrase(rng: random.Random, lo: int = 2, hi: int = 5) -> str:
    return " ".join(rng.choice(WORDS) for _ in range(rng.randint(lo, hi)))


def param_plan(rng: random.Random) -> list[tuple[str, bool, bool, bool]]:
    """(name, typed, described, wrapped) for 0..4 distinct params."""
    names = rng.sample(NAMES, rng.randint(0, 4))
    return [(n, rng.random() < 0.7, rng.random() < 0.8, rng.random() < 0.2) for n in names]


def google_comment(rng: random.Random) -> str:
    lines = [rng.choice(SUMMARIES)]
    if rng.random() < 0.3:
        lines += ["", phrase(rng, 4, 8) + "."]
    params = param_plan(rng)
    if params:
        lines += ["", rng.choice(["Args:", "Arguments:"])]
        for name, typed, described, wrapped in params:
            head = f"{name} ({rng.choice(TYPES)})" if typed else name
            desc = phrase(rng) if described else ""
            lines.append(f"    {head}: {desc}".rstrip())
            if wrapped and described:
                lines.append(f"        {phrase(rng)}")
    if rng.random() < 0.6:
        lines += ["", "Returns:", f"    {rng.choice(TYPES)}: {phrase(rng)}"]
    if rng.random() < 0.3:
        lines += ["", "Raises:", f"    {rng.choice(EXCEPTIONS)}: {phrase(rng)}"]
    body = "\n    ".join(lines)
    return f'"""{body}\n    """'


def javadoc_comment(rng: random.Random) -> str:
    lines = [rng.choice(SUMMARIES)]
    if rng.random() < 0.3:
        lines += [phrase(rng, 4, 8) + "."]
    for name, _typed, described, wrapped in param_plan(rng):
        lines.append(f"@param {name} {phrase(rng) if described else ''}".rstrip())
        if wrapped and described:
            lines.append(phrase(rng))
    if rng.random() < 0.6:
        lines.append(f"@return {phrase(rng)}")
    if rng.random() < 0.3:
        lines.append(f"@throws {rng.choice(EXCEPTIONS)} {phrase(rng)}")
    return "/**\n" + "".join(f"     * {line}\n" for line in lines) + "     */"


def jsdoc_comment(rng: random.Random) -> str:
    lines = [rng.choice(SUMMARIES)]
    for name, typed, described, _wrapped in param_plan(rng):
        shown = f"[{name}]" if rng.random() < 0.15 else name
        head = f"@param {{{rng.choice(JS_TYPES)}}} {shown}" if typed else f"@param {shown}"
        if described:
            sep = " - " if rng.random() < 0.5 else " "
            head += sep + phrase(rng)
        lines.append(head)
    if rng.random() < 0.6:
        lines.append(f"@returns {{{rng.choice(JS_TYPES)}}} {phrase(rng)}")
    return "/**\n" + "".join(f" * {line}\n" for line in lines) + " */"


def xmldoc_comment(rng: random.Random) -> str:
    lines = [f"<summary>{rng.choice(SUMMARIES)}</summary>"]
    for name, _typed, described, _wrapped in param_plan(rng):
        lines.append(f'<param name="{name}">{phrase(rng) if described else ""}</param>')
    if rng.random() < 0.6:
        lines.append(f"<returns>{phrase(rng)}</returns>")
    if rng.random() < 0.3:
        lines.append(f'<exception cref="{rng.choice(EXCEPTIONS)}">{phrase(rng)}</exception>')
    return "\n".join(f"/// {line}" for line in lines)


def ref_google(raw: str) -> list:
    text = inspect.cleandoc(raw[3:-3])
    doc = docstring_parser.parse(text, docstring_parser.DocstringStyle.GOOGLE)
    return [[p.arg_name, p.type_name is not None, bool(p.description)] for p in doc.params]


def ref_javadoc(raw: str) -> list:
    block = javalang.javadoc.parse(raw)
    return [[name, False, bool(desc.strip())] for name, desc in block.params]


def ref_xmldoc(raw: str) -> list:
    body = "\n".join(line.strip()[3:].strip() for line in raw.split("\n"))
    root = ET.fromstring(f"<doc>{body}</doc>")
    return [[p.get("name"), False, bool((p.text or "").strip())] for p in root.iter("param")]


_DOCTRINE = r"""
const doctrine = require('doctrine');
const input = JSON.parse(require('fs').readFileSync(0, 'utf8'));
const out = input.map(c => doctrine.parse(c, {unwrap: true, sloppy: true}).tags
  .filter(t => t.title === 'param')
  .map(t => [t.name, t.type !== null && t.type !== undefined, !!(t.description && t.description.trim())]));
process.stdout.write(JSON.stringify(out));
"""


def ref_jsdoc_all(raws: list[str]) -> list:
    proc = subprocess.run(
        ["node", "-e", _DOCTRINE], input=json.dumps(raws), capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/fixtures/docparse/agreement.json")
    args = ap.parse_args()
    rng = random.Random(SEED)
    cases = []
    for style, lang, make, ref in (
        ("GoogleDoc", "Python", google_comment, ref_google),
        ("JavaDoc", "Java", javadoc_comment, ref_javadoc),
        ("XmlDoc", "CSharp", xmldoc_comment, ref_xmldoc),
    ):
        made = 0
        while made < PER_STYLE:
            raw = make(rng)
            try:
                expected = ref(raw)
            except Exception:  # only comments the reference accepts are kept
                continue
            cases.append({"style": style, "lang": lang, "raw": raw, "expected": expected})
            made += 1
    js = [jsdoc_comment(rng) for _ in range(PER_STYLE)]
    for raw, expected in zip(js, ref_jsdoc_all(js)):
        cases.append({"style": "JSDoc", "lang": "JavaScript", "raw": raw, "expected": expected})
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(cases, fh, ensure_ascii=False, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
