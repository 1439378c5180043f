"""Print Latin-script detector scores for the calibration set.

Usage: python scripts/calibrate_langid.py [tests/fixtures/langid/dev.tsv]

Labels other than "en" are expected to come out as "other".  The thresholds
in docsieve.langid were picked from this output.
"""

import sys

from docsieve.langid import default_profile, detect, latin_scores, prepare_detection_text
from docsieve.model import SourceLang


def main() -> None:
    path = sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/langid/dev.tsv"
    profile = default_profile()
    errors = 0
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("#") or not line.strip():
                continue
            label, text = line.rstrip("\n").split("\t", 1)
            prepared = prepare_detection_text(None, text, SourceLang.PYTHON)
            s = latin_scores(prepared, profile)
            got = detect(prepared, profile).value
            want = "en" if label == "en" else "other"
            errors += got != want
            flag = "" if got == want else "  <-- WRONG"
            rival = max((k for k in s if k != "en"), key=s.get)
            print(f"{label:9} en={s['en']:7.3f} best_rival={rival}:{s[rival]:7.3f} {got:6} {text}{flag}")
    print(f"errors: {errors}")


if __name__ == "__main__":
    main()
