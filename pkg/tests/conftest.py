import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []
TIMINGS: dict[str, float] = {}


@pytest.fixture(scope="session")
def exact_tables():
    """Both tables recomputed on the exact rank path for n = 1..23."""
    import time

    from symspan.tables import compute_tables

    start = time.perf_counter()
    tables = compute_tables(23)
    TIMINGS["exact_tables"] = time.perf_counter() - start
    return tables


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
