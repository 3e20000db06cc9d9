import pytest
from hypothesis import strategies as st

from chebalg.chebyshev import ChebKind, clear_cache, gen_recurrence
from chebalg.poly import IntPoly


def T(n):
    return gen_recurrence(ChebKind.FIRST, n)


def U(n):
    return gen_recurrence(ChebKind.SECOND, n)


def Tstar(n):
    return gen_recurrence(ChebKind.SHIFTED_FIRST, n)


def P(*coeffs):
    return IntPoly(coeffs)


small_polys = st.lists(st.integers(-20, 20), max_size=6).map(IntPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


@pytest.fixture
def fresh_cache():
    clear_cache()
    yield
    clear_cache()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
