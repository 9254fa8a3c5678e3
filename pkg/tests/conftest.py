import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewgrowth import parse_preset_spec  # noqa: E402

PRESET_SPECS = ["bii", "gn:3", "gn:4", "hn:1", "hn:2", "abel:2", "abel:3", "free:2", "free:3", "appendix2", "appendix3"]
SMALL_SPECS = ["bii", "gn:3", "hn:1", "abel:2", "abel:3", "free:2", "appendix2", "appendix3"]


@pytest.fixture(params=PRESET_SPECS)
def any_preset(request):
    return parse_preset_spec(request.param)


@pytest.fixture(params=SMALL_SPECS)
def small_preset(request):
    return parse_preset_spec(request.param)


@pytest.fixture
def bii():
    return parse_preset_spec("bii")


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
