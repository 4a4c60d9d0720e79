import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from boscohom import catalog  # noqa: E402
from boscohom.complex import assemble  # noqa: E402
from boscohom.tait import build_tait  # noqa: E402

SMALL = [n for n in catalog.names(include_long=False)]
UP_TO_7 = [n for n in SMALL if catalog.get(n).n_crossings <= 7]


@pytest.fixture(scope="session")
def complexes():
    cache = {}

    def get(name, **kw):
        key = (name, tuple(sorted(kw.items())))
        if key not in cache:
            cache[key] = assemble(build_tait(catalog.get(name), **kw))
        return cache[key]

    return get


# one summary line per acceptance criterion ---------------------------------
_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    number, label = mark.args
    entry = _criteria.setdefault(number, [label, True, 0.0])
    entry[1] = entry[1] and not rep.failed
    entry[2] += rep.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        label, ok, seconds = _criteria[number]
        gate = "" if number <= 10 else " (non-gating)"
        tr.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {seconds:7.2f}s  {label}{gate}")
    gating = [ok for n, (_, ok, _) in _criteria.items() if n <= 10]
    if len(gating) == 10:
        tr.write_line(f"gating criteria 1-10: {'all PASS' if all(gating) else 'FAIL'}")
