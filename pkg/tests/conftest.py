import time

import pytest

from assocnb.datasets import reference_model, toy_transactions
from assocnb.apriori import TransactionDB


@pytest.fixture(scope="session")
def ref_model():
    return reference_model()


@pytest.fixture
def toy_db():
    return TransactionDB(toy_transactions())


_acceptance = []
_timing = {}
SUITE_BUDGET = 60.0


def pytest_sessionstart(session):
    _timing["start"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    if not _acceptance:
        return
    _timing["elapsed"] = elapsed = time.perf_counter() - _timing["start"]
    if elapsed >= SUITE_BUDGET and exitstatus == 0:
        session.exitstatus = 1


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
    elapsed = _timing.get("elapsed", 0.0)
    verdict = "PASS" if elapsed < SUITE_BUDGET else "FAIL"
    terminalreporter.write_line(f"{verdict}  whole suite under {SUITE_BUDGET:.0f} s ({elapsed:.1f} s)")
