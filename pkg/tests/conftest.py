import os
import random
import sys

import pytest

from ringschemes.arith.field import get_field

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def root():
    return ROOT


@pytest.fixture(params=[(2, 1), (3, 1), (2, 2), (3, 2)], ids=["F2", "F3", "F4", "F9"])
def field(request):
    return get_field(*request.param)



def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
