import pytest

_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets ``detail`` and asserts."""

    class _C:
        def __init__(self, key):
            self.key = key
            self.detail = ""

        def done(self, ok: bool, detail: str = ""):
            _RESULTS[self.key] = (ok, detail or self.detail)
            line = f"{self.key} {'PASS' if ok else 'FAIL'} {detail or self.detail}".rstrip()
            print(line)
            return ok

    key = request.node.name.split("_")[1].upper()
    c = _C(key)
    yield c
    if key not in _RESULTS:
        _RESULTS[key] = (False, "did not finish")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS):
        ok, detail = _RESULTS[key]
        terminalreporter.write_line(f"{key} {'PASS' if ok else 'FAIL'} {detail}".rstrip())
