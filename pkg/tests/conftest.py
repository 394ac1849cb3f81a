import itertools

import pytest

from sepwords import kernels
from sepwords.kernels import _pykernels

BACKENDS = [_pykernels]
if kernels.compiled() is not None:
    BACKENDS.append(kernels.compiled())


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def backend(request):
    return request.param


def naive_positions(x: str, w: str):
    return [j + 1 for j in range(len(x) - len(w) + 1) if x[j:j + len(w)] == w]


def naive_period(w: str) -> int:
    for p in range(1, len(w) + 1):
        if all(w[i] == w[i + p] for i in range(len(w) - p)):
            return p
    raise AssertionError("unreachable")


def trial_division_primes(k):
    return [q for q in range(2, k + 1) if all(q % f for f in range(2, q))]


def words(n):
    return ["".join(t) for t in itertools.product("01", repeat=n)]


# acceptance reporting: one line per criterion, printed after the run
_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    notes = "; ".join(v for k, v in item.user_properties if k == "note")
    _ACCEPTANCE[number] = ("PASS" if report.passed else "FAIL", title, notes)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, notes = _ACCEPTANCE[number]
        line = f"[{status}] {number:2d}. {title}"
        terminalreporter.write_line(line + (f" ({notes})" if notes else ""))
