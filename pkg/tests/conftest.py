import numpy as np
import pytest


def pareto_grid(alpha, xmin, n):
    """Noise-free pseudo-sample: exact Pareto quantiles at (i - 0.5) / n."""
    p = (np.arange(1, n + 1) - 0.5) / n
    return xmin * (1 - p) ** (-1 / alpha)


@pytest.fixture
def grid():
    return pareto_grid


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
