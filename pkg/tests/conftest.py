import os
import random

import pytest

ACCEPTANCE_LINES = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture
def seed() -> int:
    return int(os.environ.get("HSOBSTRUCT_SEED", "0"))


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
