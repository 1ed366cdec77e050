import os
from pathlib import Path

import pytest

from hvseq import _pure

FIXTURES = Path(__file__).parent / "fixtures"
DATA_DIR = Path(os.environ.get("HVSEQ_DATA", Path(__file__).parents[1] / "data"))

try:
    from hvseq import _ext
except ImportError:
    _ext = None

BACKENDS = [pytest.param(_pure, id="python")]
if _ext is not None:
    BACKENDS.append(pytest.param(_ext, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def fixtures():
    return FIXTURES


def data_file(name):
    path = DATA_DIR / name
    if not path.exists():
        pytest.skip(f"corpus not available: {path} (see scripts/fetch_data.py)")
    return path


_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            status = f"FAIL (known: {report.wasxfail.removeprefix('reason: ')})"
        elif report.skipped:
            reason = report.longrepr[2] if isinstance(report.longrepr, tuple) else str(report.longrepr)
            status = f"SKIP ({reason.removeprefix('Skipped: ')})"
        else:
            status = "PASS" if report.passed else "FAIL"
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _acceptance[(number, item.name)] = (title, status, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), (title, status, detail) in sorted(_acceptance.items()):
        line = f"[{number}] {title} :: {name}: {status}"
        if detail:
            line += f" | {detail}"
        terminalreporter.write_line(line)
