import pytest
from gnfakit.nfa import validate_nfa

_RESULTS: list[str] = []


@pytest.fixture
def report():
    """Record a one-line pass/fail verdict for the acceptance summary."""

    def _report(name: str, ok: bool, detail: str = ""):
        _RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture
def fig7():
    # finals printed as (B C E F) in the original listing; C and F are not states
    return validate_nfa({
        "states": ["S", "A", "B", "D", "E"],
        "sigma": ["a", "b"],
        "start": "S",
        "finals": ["B", "E"],
        "rules": [
            ["S", "eps", "A"], ["S", "eps", "D"],
            ["A", "a", "B"], ["B", "b", "B"],
            ["D", "b", "E"], ["E", "a", "E"],
        ],
    })
