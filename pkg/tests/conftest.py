import random

import pytest
from hypothesis import HealthCheck, settings

from srcount import LabeledText, SrcIndex

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

EXAMPLE_TEXT = "abracadabra"
EXAMPLE_LABELS = (41, 23, 93, 66, 53, 33, 2, 24, 37, 29, 62)

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def example_lt():
    return LabeledText(EXAMPLE_TEXT, EXAMPLE_LABELS)


@pytest.fixture(scope="session")
def example_idx(example_lt):
    return SrcIndex(example_lt)


def random_text(rng: random.Random, n: int, sigma: int) -> str:
    letters = "abcdefghijklmnopqrstuvwxyz"[:sigma]
    return "".join(rng.choice(letters) for _ in range(n))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
