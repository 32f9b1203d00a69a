import re

import numpy as np
import pytest

from actdag.corpus import standard_corpus

_CRITERION_RE = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def corpus8():
    """Shared corpus: exhaustive connected chordal p <= 5 plus 500 seeded
    random chordal instances with 6 <= p <= 8."""
    return standard_corpus(8, rng=np.random.default_rng(1), n_random=500)


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION_RE.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    label = m.group(2).replace("_", " ")
    _outcomes[num] = ("PASS" if report.passed else "FAIL", label)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        status, label = _outcomes[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  ({label})")
