from __future__ import annotations

from hypothesis import settings
from hypothesis import strategies as st

from frobstab.states import State

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def states(draw, max_n: int = 4, max_size: int = 8, box: int = 5):
    n = draw(st.integers(1, max_n))
    entry = st.integers(-box, box)
    weights = draw(st.lists(st.tuples(*[entry] * n), min_size=1, max_size=max_size))
    return State(n, tuple(weights))


# --- acceptance summary: one PASS/FAIL line per criterion ----------------------

_acceptance: dict = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        detail = dict(report.user_properties).get("detail", "")
        _acceptance[crit] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance):
        status, detail = _acceptance[crit]
        terminalreporter.write_line(f"{status} criterion {crit}: {detail}")
