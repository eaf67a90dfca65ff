import json
from pathlib import Path

import pytest

from intervalfusion import load_problem, rank_alternatives
from intervalfusion.loading import bundled_dataset_bytes

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def golden():
    return json.loads((GOLDEN_DIR / "supplier_selection_expected.json").read_text())


@pytest.fixture(scope="session")
def supplier_problem():
    return load_problem(bundled_dataset_bytes())


@pytest.fixture(scope="session")
def supplier_report(supplier_problem):
    return rank_alternatives(supplier_problem)


# One pass/fail line per acceptance criterion in the terminal summary.

_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "test_criterion" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_results[name] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and (report.failed or report.skipped):
        _acceptance_results[name] = "SKIP" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_results):
        label = name.replace("test_", "").replace("_", " ")
        terminalreporter.write_line(f"{_acceptance_results[name]:4s}  {label}")
