from __future__ import annotations

import random

import pytest
from hypothesis import settings

settings.register_profile("nclin", max_examples=60, deadline=None)
settings.load_profile("nclin")


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for the acceptance summary."""
    def record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{label}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
