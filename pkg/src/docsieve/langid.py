"""Natural-language identification of comment descriptions.

The built-in detector decides by script first: mostly-Cyrillic text is
Russian outright.  Mostly-Latin text is English when English has the best
character-trigram fit among the profile's Latin-script tables (which include
transliterated Russian) and the fit clears a calibrated floor; any other
Latin-dominant text is some other language.  Alternate detectors can be
registered by name.
"""

from __future__ import annotations

import functools
import math
import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Optional

from .model import NatLang, ParsedDoc, SourceLang

PROFILE_HEADER = "#docsieve-profile v1"
PROFILE_ENV = "DOCSIEVE_PROFILE"

MIN_LETTERS = 3
SCRIPT_SHARE = 0.6
# lowest English fit accepted; calibrated on tests/fixtures/langid/dev.tsv
# with scripts/calibrate_langid.py (English rows there stay above -8.0)
EN_MIN_TRIGRAM_LOGP = -9.0

_TRANSLIT = {
    "а": "a", "б": "b", "в": "v", "г": "g", "д": "d", "е": "e", "ё": "e", "ж": "zh",
    "з": "z", "и": "i", "й": "y", "к": "k", "л": "l", "м": "m", "н": "n", "о": "o",
    "п": "p", "р": "r", "с": "s", "т": "t", "у": "u", "ф": "f", "х": "kh", "ц": "ts",
    "ч": "ch", "ш": "sh", "щ": "shch", "ъ": "", "ы": "y", "ь": "", "э": "e", "ю": "yu",
    "я": "ya",
}


def transliterate(word: str) -> str:
    return "".join(_TRANSLIT.get(c, c) for c in word.lower())


def word_trigrams(word: str) -> list[str]:
    padded = f" {word} "
    return [padded[i:i + 3] for i in range(len(padded) - 2)]


# --------------------------------------------------------------------------
# profile


@dataclass(frozen=True)
class DetectorProfile:
    """Top-k character trigram tables per language; each table sums to 1."""

    k: int
    char3: dict  # table name -> {trigram: prob}

    def floor(self, name: str) -> float:
        return self._floors[name]

    @functools.cached_property
    def _floors(self) -> dict:
        return {name: min(table.values()) / 10 for name, table in self.char3.items()}

    @classmethod
    def load(cls, path: Optional[str] = None) -> "DetectorProfile":
        if path is None:
            text = resources.files("docsieve").joinpath("data/profile.tsv").read_text("utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        lines = text.split("\n")
        header = re.match(re.escape(PROFILE_HEADER) + r" k=(\d+)$", lines[0])
        if not header:
            raise ValueError(f"not a detector profile (expected header {PROFILE_HEADER!r})")
        char3: dict = {}
        for n, line in enumerate(lines[1:], start=2):
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"profile line {n}: expected 3 tab-separated fields")
            name, trigram, prob = parts
            char3.setdefault(name, {})[trigram.replace("_", " ")] = float(prob)
        for name in ("en", "ru_translit"):
            if name not in char3:
                raise ValueError(f"profile lacks a table for {name!r}")
        return cls(k=int(header.group(1)), char3=char3)


@functools.lru_cache(maxsize=8)
def _cached_profile(path: Optional[str]) -> DetectorProfile:
    return DetectorProfile.load(path)


def default_profile() -> DetectorProfile:
    return _cached_profile(os.environ.get(PROFILE_ENV) or None)


# --------------------------------------------------------------------------
# text preparation

_TAGS = re.compile(r"\{@[^{}]*\}|\{[^{}]*\}|<[^<>]*>|@\w+")
_CODE_TOKEN = re.compile(r"[a-z][A-Z]|_|\w\.\w|\(|::")
_ASCII_IDENT = re.compile(r"^[A-Za-z_]\w*$")


def strip_identifiers(text: str) -> str:
    text = _TAGS.sub(" ", text)
    return " ".join(tok for tok in text.split() if not _CODE_TOKEN.search(tok))


def prepare_detection_text(
    doc: Optional[ParsedDoc],
    normalized: str,
    lang: SourceLang,
    function_name: Optional[str] = None,
) -> str:
    """Short description with tags and code-like tokens removed.

    For Go the whole comment is used, minus its leading function name.
    """
    if lang is SourceLang.GO:
        tokens = normalized.split()
        if tokens:
            lead = tokens[0]
            if (function_name is not None and lead == function_name) or (
                function_name is None and _ASCII_IDENT.match(lead)
            ):
                tokens = tokens[1:]
        return strip_identifiers(" ".join(tokens))
    if doc is not None:
        text = doc.short_desc
    else:
        text = re.split(r"\n[ \t]*\n", normalized.strip(), maxsplit=1)[0]
    return strip_identifiers(text)


# --------------------------------------------------------------------------
# detection


def _script(c: str) -> str:
    o = ord(c)
    if 0x0400 <= o <= 0x052F:
        return "cyrillic"
    if c.isascii() or 0x00C0 <= o <= 0x024F or 0x1E00 <= o <= 0x1EFF:
        return "latin"
    return "other"


def latin_scores(text: str, profile: DetectorProfile) -> dict[str, float]:
    """Mean trigram log-probability of ``text`` under each table."""
    words = re.findall(r"[^\W\d_]+", text.lower())
    trigrams = [t for w in words for t in word_trigrams(w)]
    scores = {}
    for name, table in profile.char3.items():
        floor = profile.floor(name)
        scores[name] = sum(math.log(table.get(t, floor)) for t in trigrams) / max(1, len(trigrams))
    return scores


def detect(text: str, profile: Optional[DetectorProfile] = None) -> NatLang:
    letters = [c for c in text if c.isalpha()]
    if len(letters) < MIN_LETTERS:
        return NatLang.UNKNOWN
    counts = {"cyrillic": 0, "latin": 0, "other": 0}
    for c in letters:
        counts[_script(c)] += 1
    total = len(letters)
    if counts["cyrillic"] / total >= SCRIPT_SHARE:
        return NatLang.RU
    if counts["latin"] / total >= SCRIPT_SHARE:
        scores = latin_scores(text, profile or default_profile())
        en = scores["en"]
        if en >= EN_MIN_TRIGRAM_LOGP and all(en > v for k, v in scores.items() if k != "en"):
            return NatLang.EN
        return NatLang.OTHER
    if counts["other"] / total >= SCRIPT_SHARE:
        return NatLang.OTHER
    return NatLang.UNKNOWN


# --------------------------------------------------------------------------
# detector plugins

Detector = Callable[[str], NatLang]
_DETECTORS: dict[str, Callable[[Optional[str]], Detector]] = {}


def register_detector(name: str, factory: Callable[[Optional[str]], Detector]) -> None:
    """Register ``factory(profile_path) -> detector`` under ``name``."""
    _DETECTORS[name] = factory


def get_detector(name: str = "builtin", profile_path: Optional[str] = None) -> Detector:
    try:
        factory = _DETECTORS[name]
    except KeyError:
        raise ValueError(f"unknown detector {name!r}; known: {sorted(_DETECTORS)}") from None
    return factory(profile_path)


def _builtin(profile_path: Optional[str]) -> Detector:
    if profile_path is None:
        return detect
    return functools.partial(_detect_with, profile_path=profile_path)


def _detect_with(text: str, profile_path: str) -> NatLang:
    return detect(text, _cached_profile(profile_path))


register_detector("builtin", _builtin)
