import numpy as np
import pytest

from wedgescheme import Zmod

F97 = Zmod(97)


@pytest.fixture
def rng():
    return np.random.default_rng(20260419)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
