"""Shared fixtures. The benchmark trajectory is expensive, so it is
integrated once per session and reused by every test that needs it."""

import numpy as np
import pytest

import ordmaps as om


@pytest.fixture(scope="session")
def lorenz_series():
    return om.integrate_lorenz(cfg=om.SimulationConfig(seed=1))


@pytest.fixture(scope="session")
def lorenz_analysis(lorenz_series):
    seq = om.symbolize(lorenz_series, om.WindowConfig())
    reports = om.analyze_partitions(lorenz_series, seq)
    return seq, reports


@pytest.fixture
def rng():
    return np.random.default_rng(20260817)


def pytest_terminal_summary(terminalreporter):
    """Echo one line per acceptance criterion after the test summary."""
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.format_results()
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
