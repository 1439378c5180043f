"""Build the bundled language-detector profile from wordfreq word lists.

Usage: python scripts/build_profile.py [--k 3000] [--out src/docsieve/data/profile.tsv]

Only needed when regenerating the profile; the package itself reads the TSV
and does not import wordfreq.
"""

import argparse
import math
from collections import Counter

from wordfreq import top_n_list, word_frequency

from docsieve.langid import PROFILE_HEADER, transliterate, word_trigrams

SOURCE_WORDS = 30000
# Latin-script languages that compete with English for Latin-dominant text
COMPETITORS = ("de", "es", "fr", "it", "nl", "pl", "pt")


def trigram_table(lang: str, k: int, mapper=lambda w: w) -> dict[str, float]:
    counts: Counter = Counter()
    for word in top_n_list(lang, SOURCE_WORDS):
        if word.isalpha():
            f = word_frequency(word, lang)
            for tri in word_trigrams(mapper(word)):
                counts[tri] += f
    top = counts.most_common(k)
    total = sum(v for _, v in top)
    return {t: v / total for t, v in top}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=3000)
    ap.add_argument("--out", default="src/docsieve/data/profile.tsv")
    args = ap.parse_args()

    tables = {"en": trigram_table("en", args.k), "ru_translit": trigram_table("ru", args.k, transliterate)}
    for lang in COMPETITORS:
        tables[lang] = trigram_table(lang, args.k)

    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{PROFILE_HEADER} k={args.k}\n")
        for name, table in tables.items():
            for tri, p in sorted(table.items()):
                assert math.isfinite(p) and p > 0
                fh.write(f"{name}\t{tri.replace(' ', '_')}\t{p:.6e}\n")


if __name__ == "__main__":
    main()
