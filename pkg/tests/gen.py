"""Hypothesis strategies and seeded generators shared by the test modules."""

import random
import string

from hypothesis import strategies as st

from docsieve.model import (
    CorpusRecord,
    DocParam,
    DocRaises,
    DocReturns,
    DocStyle,
    FunctionUnit,
    NatLang,
    ParsedDoc,
    Provenance,
    SignatureInfo,
    SourceLang,
    StructureVerdict,
    Verdict,
    Reason,
    ReasonCode,
)

CYRILLIC = "абвгдеёжзийклмнопрстуфхцчшщъыьэюя"
LETTERS = string.ascii_letters + CYRILLIC + CYRILLIC.upper()
TAG_STYLES = (DocStyle.GOOGLE, DocStyle.JAVADOC, DocStyle.JSDOC, DocStyle.XMLDOC)

GOOGLE_TYPES = ("int", "str", "bool", "Optional[int]", "Dict[str, int]", "List[Tuple[int, str]]", "pathlib.Path")
JS_TYPES = ("number", "string", "Array<string>", "Object<string, number>", "string|null", "*", "{a: number}")
EXCEPTIONS = ("ValueError", "KeyError", "IOException", "errors.NotFound", "ArgumentNullException")

word = st.text(alphabet=LETTERS + string.digits, min_size=1, max_size=9)
phrase = st.lists(word, min_size=1, max_size=6).map(" ".join)
maybe_phrase = st.one_of(st.just(""), phrase)
identifier = st.from_regex(r"[a-z_][a-z0-9_]{0,8}", fullmatch=True)


@st.composite
def parsed_docs(draw, style: DocStyle) -> ParsedDoc:
    """Well-formed ParsedDocs: canonical whitespace, unique names, style-legal types."""
    typed = style in (DocStyle.GOOGLE, DocStyle.JSDOC)
    types = GOOGLE_TYPES if style is DocStyle.GOOGLE else JS_TYPES
    type_text = st.one_of(st.none(), st.sampled_from(types)) if typed else st.none()

    long_desc = draw(st.one_of(st.none(), st.lists(phrase, min_size=1, max_size=3).map("\n\n".join)))
    short = draw(phrase) if long_desc is not None else draw(maybe_phrase)
    names = draw(st.lists(identifier, max_size=5, unique=True))
    params = tuple(DocParam(n, draw(type_text), draw(maybe_phrase)) for n in names)
    returns = draw(st.one_of(st.none(), st.builds(DocReturns, type_text, maybe_phrase)))
    if style is DocStyle.JSDOC:
        raise_type = st.one_of(st.just(""), st.sampled_from(EXCEPTIONS))
    else:
        raise_type = st.sampled_from(EXCEPTIONS)
    raises = tuple(draw(st.lists(st.builds(DocRaises, raise_type, maybe_phrase), max_size=3)))
    return ParsedDoc(style, short, long_desc, params, returns, raises)


def random_parsed_doc(rng: random.Random, style: DocStyle) -> ParsedDoc:
    """Same shape as ``parsed_docs`` but drawn from a seeded RNG (much faster)."""
    alphabet = LETTERS + string.digits

    def phrase_() -> str:
        return " ".join(
            "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 9))) for _ in range(rng.randint(1, 6))
        )

    def maybe_phrase_() -> str:
        return phrase_() if rng.random() < 0.7 else ""

    typed = style in (DocStyle.GOOGLE, DocStyle.JSDOC)
    types = GOOGLE_TYPES if style is DocStyle.GOOGLE else JS_TYPES

    def type_() -> "str | None":
        return rng.choice(types) if typed and rng.random() < 0.6 else None

    long_desc = "\n\n".join(phrase_() for _ in range(rng.randint(1, 3))) if rng.random() < 0.4 else None
    short = phrase_() if long_desc is not None or rng.random() < 0.9 else ""
    names: list[str] = []
    for _ in range(rng.randint(0, 5)):
        name = rng.choice("abcdefghijklmnopqrstuvwxyz_") + "".join(
            rng.choice(string.ascii_lowercase + string.digits + "_") for _ in range(rng.randint(0, 8))
        )
        if name not in names:
            names.append(name)
    params = tuple(DocParam(n, type_(), maybe_phrase_()) for n in names)
    returns = DocReturns(type_(), maybe_phrase_()) if rng.random() < 0.6 else None
    raises = []
    for _ in range(rng.choice((0, 0, 1, 2, 3))):
        exc = "" if style is DocStyle.JSDOC and rng.random() < 0.2 else rng.choice(EXCEPTIONS)
        raises.append(DocRaises(exc, maybe_phrase_()))
    return ParsedDoc(style, short, long_desc, params, returns, tuple(raises))


# --------------------------------------------------------------------------
# synthetic corpus records for the dedup and filter properties


def make_record(
    repo: str,
    path: str,
    line: int,
    code: str,
    comment: str,
    lang: SourceLang = SourceLang.PYTHON,
    verdict: Verdict = Verdict.COMPLETE,
    nat_lang: NatLang = NatLang.RU,
) -> CorpusRecord:
    unit = FunctionUnit(
        lang=lang,
        signature=SignatureInfo("f"),
        code_text=code,
        raw_comment=comment,
        provenance=Provenance(repo, path, line),
    )
    reasons = () if verdict is Verdict.COMPLETE else (Reason(ReasonCode.NO_SECTIONS),)
    return CorpusRecord(unit, comment, None, StructureVerdict(verdict, reasons), nat_lang)


def random_records(rng: random.Random, max_size: int = 30) -> list[CorpusRecord]:
    """Records drawn from small pools so duplicates of every kind are common."""
    codes = ["def f(): return %d" % i + " " * rng.randint(0, 900) for i in range(6)]
    comments = ["Комментарий номер %d." % i + "!" * rng.randint(0, 600) for i in range(6)]
    out = []
    for _ in range(rng.randint(0, max_size)):
        out.append(
            make_record(
                repo=rng.choice("ab"),
                path=rng.choice(["x.py", "y.py"]),
                line=rng.randint(1, 50),
                code=rng.choice(codes),
                comment=rng.choice(comments),
                verdict=rng.choice(list(Verdict)),
                nat_lang=rng.choice(list(NatLang)),
            )
        )
    return sorted(out, key=lambda r: r.sort_key)


# --------------------------------------------------------------------------
# seeded Go (name, comment) pairs

_GO_TOKEN_CHARS = "abcSumXyz_0123,.:()Яюж"


def random_go_pair(rng: random.Random) -> tuple[str, str]:
    """A function name and a comment whose first token is often, but not always, the name."""
    head = rng.choice(string.ascii_letters + "_" + CYRILLIC)
    name = head + "".join(rng.choice(string.ascii_letters + string.digits + "_") for _ in range(rng.randint(0, 8)))

    def token() -> str:
        return "".join(rng.choice(_GO_TOKEN_CHARS) for _ in range(rng.randint(1, 10)))

    lead = rng.choice([
        name,
        name,
        name.swapcase(),
        name + rng.choice([",", ".", ":", "()", "s"]),
        rng.choice(["_", "a", "x"]) + name,
        name[:-1] if len(name) > 1 else name + name,
        token(),
    ])
    rest = [token() for _ in range(rng.randint(0, 5))]
    sep = rng.choice([" ", "  ", "\t", "\n// "])
    if rng.random() < 0.1:
        return name, " ".join(rest)
    return name, sep.join([lead] + rest)
