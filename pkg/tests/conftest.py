from fractions import Fraction

from hypothesis import strategies as st

small_fracs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 5))
node_lists = st.lists(small_fracs, max_size=4)

ACCEPTANCE_LINES = {}


def record(criterion: int, ok: bool, detail: str):
    ACCEPTANCE_LINES[criterion] = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
