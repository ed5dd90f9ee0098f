import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# criterion number -> (title, passed); filled in by the acceptance tests
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion():
    """Register a criterion as failing; the returned callback marks it passed.

    Tests call the callback as their last statement, so any failed
    assertion leaves the criterion reported as FAIL.
    """
    def start(number: int, title: str):
        ACCEPTANCE[number] = (title, False)
        return lambda: ACCEPTANCE.__setitem__(number, (title, True))

    return start


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
