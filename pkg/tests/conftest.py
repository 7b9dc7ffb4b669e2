import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maxarcs.arcs import denniston_arc
from maxarcs.designs import design_from_arc
from maxarcs.geometry import Gf2mField, make_pg2


@pytest.fixture(scope="session")
def planes():
    return {m: make_pg2(Gf2mField(m)) for m in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def arc_m2(planes):
    return denniston_arc(Gf2mField(2), 2, plane=planes[2])


@pytest.fixture(scope="session")
def arc_m3(planes):
    return denniston_arc(Gf2mField(3), 2, plane=planes[3])


@pytest.fixture(scope="session")
def arc_pg16_1(planes):
    return denniston_arc(Gf2mField(4), 2, plane=planes[4])


@pytest.fixture(scope="session")
def arc_pg16_2(planes):
    return denniston_arc(Gf2mField(4), 2, (0, 1, 6, 7), plane=planes[4])


@pytest.fixture(scope="session")
def design_m2(arc_m2):
    return design_from_arc(arc_m2)


@pytest.fixture(scope="session")
def design_m3(arc_m3):
    return design_from_arc(arc_m3)


# -- one summary line per acceptance criterion ---------------------------------

_criteria: dict[int, list[tuple[str, str, str]]] = {}


def _criterion(nodeid):
    name = nodeid.split("::")[-1]
    if "test_acceptance.py" not in nodeid or not name.startswith("test_criterion_"):
        return None
    return int(name.split("_")[2])


def pytest_runtest_logreport(report):
    num = _criterion(report.nodeid)
    if num is None:
        return
    if report.when == "call" or report.outcome != "passed":
        reason = ""
        if report.skipped and isinstance(report.longrepr, tuple):
            reason = report.longrepr[2].removeprefix("Skipped: ")
        _criteria.setdefault(num, []).append((report.nodeid.split("::")[-1], report.outcome, reason))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        parts = _criteria[num]
        outcomes = [o for _, o, _ in parts]
        if "failed" in outcomes:
            verdict = "FAIL"
        elif "passed" in outcomes:
            verdict = "PASS"
        else:
            verdict = "SKIP"
        notes = [f"{name} skipped: {why}" for name, o, why in parts if o == "skipped"]
        line = f"{verdict} criterion {num}"
        if notes and verdict != "SKIP":
            line += " (partial; " + "; ".join(notes) + ")"
        elif notes:
            line += " (" + "; ".join(notes) + ")"
        terminalreporter.write_line(line)
