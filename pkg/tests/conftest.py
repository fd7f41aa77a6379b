import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from znperfect import _backend, _kernels_py  # noqa: E402

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _backend.compiled is not None:
    BACKENDS.append(pytest.param(_backend.compiled, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
