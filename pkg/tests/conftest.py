import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from deltachroma.binary import F2SymMatrix, delta_matroid_of_matrix
from deltachroma.setsystem import SetSystem, twist

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def set_systems(draw, min_n=0, max_n=4, proper=True):
    n = draw(st.integers(min_n, max_n))
    lo = 1 if proper else 0
    code = draw(st.integers(lo, (1 << (1 << n)) - 1))
    return SetSystem(n, tuple(F for F in range(1 << n) if code >> F & 1))


@st.composite
def sym_matrices(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return F2SymMatrix(n, tuple(rows))


@st.composite
def binary_delta_matroids(draw, min_n=0, max_n=5):
    A = draw(sym_matrices(min_n, max_n))
    T = draw(st.integers(0, (1 << A.n) - 1))
    return twist(delta_matroid_of_matrix(A), T)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
