import os
import sys

import pytest

from crnbif.crn_model import parse_network


def net(text, species="XY"):
    return parse_network(text, species=species)


@pytest.fixture(scope="session")
def runner():
    """One shared pipeline cache for every test that needs the full sweeps."""
    from crnbif.reproduce import Runner
    jobs = int(os.environ.get("CRNBIF_JOBS", "1"))
    return Runner(jobs)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs a full enumeration sweep")


# criterion number -> "PASS" / "FAIL", filled in by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {n}: {ACCEPTANCE[n]}")
