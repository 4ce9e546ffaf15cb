from __future__ import annotations

import pytest
from hypothesis import settings

from colombeau_lab.mollifier import alternative_mollifier, default_mollifier

settings.register_profile("lab", max_examples=40, deadline=None)
settings.load_profile("lab")


@pytest.fixture(scope="session")
def mol():
    return default_mollifier()


@pytest.fixture(scope="session")
def alt():
    return alternative_mollifier()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
