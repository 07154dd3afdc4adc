import time

import pytest

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


@pytest.fixture
def criterion(request):
    """Time a criterion body and log one PASS/FAIL line for the summary.

    Usage: ``with criterion(3, "label", budget_s) as c: ...; c.detail = "..."``.
    """
    lines = request.config.stash[_LINES_KEY]

    class _Run:
        def __init__(self, number, label, budget):
            self.number, self.label, self.budget = number, label, budget
            self.detail = ""

        def __enter__(self):
            self.t0 = time.perf_counter()
            return self

        def __exit__(self, exc_type, exc, tb):
            self.elapsed = time.perf_counter() - self.t0
            ok = exc_type is None and self.elapsed < self.budget
            status = "PASS" if ok else "FAIL"
            why = self.detail if exc is None else f"{type(exc).__name__}: {str(exc).splitlines()[0][:160]}"
            line = (f"[{status}] criterion {self.number}: {self.label} "
                    f"({self.elapsed:.1f}s / budget {self.budget:g}s) {why}").rstrip()
            lines.append(line)
            print(line)
            if exc_type is None:
                assert self.elapsed < self.budget, f"criterion {self.number} over budget: {self.elapsed:.1f}s"
            return False

    return _Run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
