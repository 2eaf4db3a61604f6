import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion id -> (outcome, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, list] = {}


@pytest.fixture
def acceptance_detail(request):
    """Attach a one-line detail string to the current acceptance criterion."""
    cid = request.node.name.split("_")[1]

    def record(text: str):
        ACCEPTANCE.setdefault(cid, ["?", ""])[1] = text

    return record


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_A" not in report.nodeid:
        return
    cid = report.nodeid.split("::test_")[1].split("_")[0]
    entry = ACCEPTANCE.setdefault(cid, ["?", ""])
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        entry[0] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda c: int(c[1:])):
        outcome, detail = ACCEPTANCE[cid]
        terminalreporter.write_line(f"{cid} {outcome}  {detail}")
