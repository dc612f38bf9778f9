import pytest

from ringlab.expr import eval_expr


@pytest.fixture(scope="session")
def ring():
    """Evaluate a ring expression once per session."""
    cache = {}

    def get(text):
        if text not in cache:
            cache[text] = eval_expr(text)
        return cache[text]

    return get


def label_set(S):
    return set(S.labels())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
