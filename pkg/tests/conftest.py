import json
import pathlib

import pytest

from hypothesis import settings

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
GOLD = FIXTURES / "gold"
PIPELINE = FIXTURES / "pipeline"

settings.register_profile("default", deadline=None, print_blob=True)
settings.load_profile("default")


def load_gold() -> dict:
    with open(GOLD / "labels.json", encoding="utf-8") as fh:
        return json.load(fh)


def load_langid_samples(name: str = "samples.tsv") -> list[tuple[str, str]]:
    rows = []
    for line in (FIXTURES / "langid" / name).read_text(encoding="utf-8").split("\n"):
        if line and not line.startswith("#"):
            label, text = line.split("\t", 1)
            rows.append((label, text))
    return rows


@pytest.fixture(scope="session")
def gold_labels() -> dict:
    return load_gold()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
